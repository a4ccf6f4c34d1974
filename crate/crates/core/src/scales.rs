//! Animatable pan/zoom.
//!
//! A data point maps to the screen in two steps. It is first normalized
//! into the screen range (the identity view), then the transform applies
//! per axis: `screen = translate + scale * normalized`. All four transform
//! values are attributes, so they animate, interrupt, and compute like any
//! mark attribute.

use std::cell::{Cell, RefCell};
use std::rc::Rc;

use crate::attribute::{AnimationSpec, Attribute, AttributeValue};
use crate::clock::{FrameClock, Millis};
use crate::error::{Error, Result};
use crate::mark::Mark;
use crate::signal::CompletionSignal;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Domain {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Self {
            x_min,
            x_max,
            y_min,
            y_max,
        }
    }

    pub fn unit() -> Self {
        Self::new(0.0, 1.0, 0.0, 1.0)
    }

    fn validate(&self) -> Result<()> {
        let ok = |lo: f64, hi: f64| lo.is_finite() && hi.is_finite() && hi > lo;
        if !ok(self.x_min, self.x_max) || !ok(self.y_min, self.y_max) {
            return Err(Error::DegenerateDomain(format!("{self:?}")));
        }
        Ok(())
    }
}

/// Values of the four transform attributes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform {
    pub translate_x: f64,
    pub translate_y: f64,
    pub scale_x: f64,
    pub scale_y: f64,
}

impl Transform {
    pub const IDENTITY: Transform = Transform {
        translate_x: 0.0,
        translate_y: 0.0,
        scale_x: 1.0,
        scale_y: 1.0,
    };

    fn validate(&self) -> Result<()> {
        for s in [self.scale_x, self.scale_y] {
            if !s.is_finite() || s <= 0.0 {
                return Err(Error::InvalidScale(s));
            }
        }
        if !self.translate_x.is_finite() || !self.translate_y.is_finite() {
            return Err(Error::InvalidSpec("non-finite translate".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FitMode {
    /// One scale for both axes (the smaller fit), preserving aspect ratio.
    #[default]
    Uniform,
    PerAxis,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZoomOptions {
    /// Fraction of the range left empty on each side, in `[0, 0.5)`.
    pub padding: f64,
    pub fit: FitMode,
}

impl Default for ZoomOptions {
    fn default() -> Self {
        Self {
            padding: 0.0,
            fit: FitMode::Uniform,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FollowMode {
    /// Re-solve zoom and center every frame.
    #[default]
    Refit,
    /// Keep the current zoom and only recenter.
    Center,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FollowOptions {
    pub zoom: ZoomOptions,
    pub mode: FollowMode,
}

/// Reads each mark's specified `(x, y)`.
pub fn specified_position(x: &str, y: &str) -> impl Fn(&Mark) -> Option<(f64, f64)> + Clone + 'static {
    let (x, y) = (x.to_string(), y.to_string());
    move |m| Some((m.number_specified(&x).ok()?, m.number_specified(&y).ok()?))
}

/// Reads each mark's momentary `(x, y)`.
pub fn momentary_position(x: &str, y: &str) -> impl Fn(&Mark) -> Option<(f64, f64)> + Clone + 'static {
    let (x, y) = (x.to_string(), y.to_string());
    move |m| Some((m.number(&x).ok()?, m.number(&y).ok()?))
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    domain: Domain,
    width: f64,
    height: f64,
}

impl Frame {
    fn normalize(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let d = &self.domain;
        (
            (x - d.x_min) / (d.x_max - d.x_min) * self.width,
            (y - d.y_min) / (d.y_max - d.y_min) * self.height,
        )
    }

    fn denormalize(&self, (nx, ny): (f64, f64)) -> (f64, f64) {
        let d = &self.domain;
        (
            d.x_min + nx / self.width * (d.x_max - d.x_min),
            d.y_min + ny / self.height * (d.y_max - d.y_min),
        )
    }

    /// The transform placing normalized bounds `(x0, y0, x1, y1)` centered
    /// inside the padded range. Zero-extent axes impose no fit, and the
    /// scale never exceeds `max_scale`.
    fn fit(&self, bounds: (f64, f64, f64, f64), opts: ZoomOptions, max_scale: f64) -> Transform {
        let (x0, y0, x1, y1) = bounds;
        let avail = 1.0 - 2.0 * opts.padding;
        let axis_fit = |extent: f64, size: f64| {
            if extent > 0.0 {
                avail * size / extent
            } else {
                f64::INFINITY
            }
        };
        let fx = axis_fit(x1 - x0, self.width);
        let fy = axis_fit(y1 - y0, self.height);
        let (sx, sy) = match opts.fit {
            FitMode::Uniform => {
                let s = fx.min(fy).min(max_scale);
                (s, s)
            }
            FitMode::PerAxis => (fx.min(max_scale), fy.min(max_scale)),
        };
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        Transform {
            translate_x: self.width / 2.0 - sx * cx,
            translate_y: self.height / 2.0 - sy * cy,
            scale_x: sx,
            scale_y: sy,
        }
    }

    fn bounds(&self, marks: &[Mark], position: &dyn Fn(&Mark) -> Option<(f64, f64)>) -> Result<(f64, f64, f64, f64)> {
        if marks.is_empty() {
            return Err(Error::EmptyMarkSet);
        }
        let mut b = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for m in marks {
            let p = position(m)
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .ok_or_else(|| Error::MissingPosition(m.id().to_string()))?;
            let (nx, ny) = self.normalize(p);
            b = (b.0.min(nx), b.1.min(ny), b.2.max(nx), b.3.max(ny));
        }
        Ok(b)
    }
}

type FieldOf = fn(&Transform) -> f64;

pub struct ViewportTransform {
    translate_x: Attribute<f64>,
    translate_y: Attribute<f64>,
    scale_x: Attribute<f64>,
    scale_y: Attribute<f64>,
    frame: Frame,
    max_scale: f64,
    following: Cell<bool>,
}

impl ViewportTransform {
    /// Identity transform over `domain` drawn into a `width` x `height` range.
    pub fn new(domain: Domain, width: f64, height: f64) -> Result<Self> {
        domain.validate()?;
        for side in [width, height] {
            if !side.is_finite() || side <= 0.0 {
                return Err(Error::DegenerateDomain(format!("screen range {width}x{height}")));
            }
        }
        Ok(Self {
            translate_x: Attribute::new(0.0),
            translate_y: Attribute::new(0.0),
            scale_x: Attribute::new(1.0),
            scale_y: Attribute::new(1.0),
            frame: Frame { domain, width, height },
            max_scale: 10.0,
            following: Cell::new(false),
        })
    }

    /// Cap used when the marks to fit have no extent (default 10).
    pub fn with_max_scale(mut self, max_scale: f64) -> Result<Self> {
        if !max_scale.is_finite() || max_scale <= 0.0 {
            return Err(Error::InvalidScale(max_scale));
        }
        self.max_scale = max_scale;
        Ok(self)
    }

    pub fn domain(&self) -> Domain {
        self.frame.domain
    }

    pub fn range(&self) -> (f64, f64) {
        (self.frame.width, self.frame.height)
    }

    pub fn translate_x(&self) -> &Attribute<f64> {
        &self.translate_x
    }

    pub fn translate_y(&self) -> &Attribute<f64> {
        &self.translate_y
    }

    pub fn scale_x(&self) -> &Attribute<f64> {
        &self.scale_x
    }

    pub fn scale_y(&self) -> &Attribute<f64> {
        &self.scale_y
    }

    pub fn momentary(&self) -> Transform {
        Transform {
            translate_x: self.translate_x.get(),
            translate_y: self.translate_y.get(),
            scale_x: self.scale_x.get(),
            scale_y: self.scale_y.get(),
        }
    }

    pub fn momentary_at(&self, t: Millis) -> Transform {
        Transform {
            translate_x: self.translate_x.get_at(t),
            translate_y: self.translate_y.get_at(t),
            scale_x: self.scale_x.get_at(t),
            scale_y: self.scale_y.get_at(t),
        }
    }

    pub fn specified(&self) -> Transform {
        Transform {
            translate_x: self.translate_x.get_specified(),
            translate_y: self.translate_y.get_specified(),
            scale_x: self.scale_x.get_specified(),
            scale_y: self.scale_y.get_specified(),
        }
    }

    pub fn is_following(&self) -> bool {
        self.following.get()
    }

    /// Data to screen under the momentary transform.
    pub fn map_point(&self, p: (f64, f64)) -> (f64, f64) {
        self.map_with(&self.momentary(), p)
    }

    pub fn map_point_at(&self, p: (f64, f64), clock: &FrameClock) -> (f64, f64) {
        self.map_with(&self.momentary_at(clock.now()), p)
    }

    pub fn map_with(&self, t: &Transform, p: (f64, f64)) -> (f64, f64) {
        let (nx, ny) = self.frame.normalize(p);
        (t.translate_x + t.scale_x * nx, t.translate_y + t.scale_y * ny)
    }

    /// Screen to data under the momentary transform.
    pub fn invert_point(&self, p: (f64, f64)) -> (f64, f64) {
        self.invert_with(&self.momentary(), p)
    }

    pub fn invert_point_at(&self, p: (f64, f64), clock: &FrameClock) -> (f64, f64) {
        self.invert_with(&self.momentary_at(clock.now()), p)
    }

    pub fn invert_with(&self, t: &Transform, (sx, sy): (f64, f64)) -> (f64, f64) {
        self.frame
            .denormalize(((sx - t.translate_x) / t.scale_x, (sy - t.translate_y) / t.scale_y))
    }

    /// Advances all four attributes.
    pub fn advance(&self, to: Millis) -> Result<bool> {
        let mut changed = false;
        for a in self.attributes() {
            changed |= a.advance(to)?;
        }
        Ok(changed)
    }

    fn attributes(&self) -> [&Attribute<f64>; 4] {
        [&self.translate_x, &self.translate_y, &self.scale_x, &self.scale_y]
    }

    /// Freezes a follow at its current values.
    pub fn unfollow(&self) {
        if self.following.replace(false) {
            for a in self.attributes() {
                a.set(a.get());
            }
        }
    }

    pub fn set_transform(&self, t: Transform) -> Result<()> {
        t.validate()?;
        self.unfollow();
        self.translate_x.set(t.translate_x);
        self.translate_y.set(t.translate_y);
        self.scale_x.set(t.scale_x);
        self.scale_y.set(t.scale_y);
        Ok(())
    }

    pub fn animate_transform(
        &self,
        t: Transform,
        spec: AnimationSpec<f64>,
        clock: &FrameClock,
    ) -> Result<CompletionSignal> {
        t.validate()?;
        spec.validate()?;
        self.unfollow();
        let signals = [
            self.translate_x.animate_to(t.translate_x, spec.clone(), clock)?,
            self.translate_y.animate_to(t.translate_y, spec.clone(), clock)?,
            self.scale_x.animate_to(t.scale_x, spec.clone(), clock)?,
            self.scale_y.animate_to(t.scale_y, spec, clock)?,
        ];
        Ok(CompletionSignal::all(signals))
    }

    /// The transform that fits `marks` into the padded range.
    pub fn fit_transform(
        &self,
        marks: &[Mark],
        position: impl Fn(&Mark) -> Option<(f64, f64)>,
        opts: ZoomOptions,
    ) -> Result<Transform> {
        if !(0.0..0.5).contains(&opts.padding) {
            return Err(Error::InvalidPadding(opts.padding));
        }
        let bounds = self.frame.bounds(marks, &position)?;
        Ok(self.frame.fit(bounds, opts, self.max_scale))
    }

    /// Animates to the transform that fits `marks` into the padded range.
    pub fn zoom_to(
        &self,
        marks: &[Mark],
        position: impl Fn(&Mark) -> Option<(f64, f64)>,
        opts: ZoomOptions,
        spec: AnimationSpec<f64>,
        clock: &FrameClock,
    ) -> Result<CompletionSignal> {
        let target = self.fit_transform(marks, position, opts)?;
        self.animate_transform(target, spec, clock)
    }

    /// Keeps `marks` in view by turning the transform attributes into
    /// computed values solved from the marks' positions at read time. Any
    /// transform-level write ends the follow; a direct write to one
    /// attribute replaces only that attribute's computation.
    pub fn follow(
        &self,
        marks: Vec<Mark>,
        position: impl Fn(&Mark) -> Option<(f64, f64)> + 'static,
        opts: FollowOptions,
    ) -> Result<()> {
        if !(0.0..0.5).contains(&opts.zoom.padding) {
            return Err(Error::InvalidPadding(opts.zoom.padding));
        }
        let frame = self.frame;
        let max_scale = self.max_scale;
        // validate once up front; later failures (e.g. a mark losing its
        // position) hold the last good solution
        let initial = frame.fit(frame.bounds(&marks, &position)?, opts.zoom, max_scale);
        self.unfollow();

        let last_good = Rc::new(Cell::new(initial));
        let marks = Rc::new(marks);
        let position = Rc::new(position);
        let bounds_now = {
            let marks = marks.clone();
            let position = position.clone();
            let last = RefCell::new(None::<(f64, f64, f64, f64)>);
            Rc::new(move || {
                let b = frame.bounds(&marks, &*position).ok();
                if b.is_some() {
                    *last.borrow_mut() = b;
                }
                *last.borrow()
            })
        };

        match opts.mode {
            FollowMode::Refit => {
                let solve = {
                    let last_good = last_good.clone();
                    let bounds_now = bounds_now.clone();
                    Rc::new(move || {
                        if let Some(b) = bounds_now() {
                            last_good.set(frame.fit(b, opts.zoom, max_scale));
                        }
                        last_good.get()
                    })
                };
                let pick: [(&Attribute<f64>, FieldOf); 4] = [
                    (&self.translate_x, |t| t.translate_x),
                    (&self.translate_y, |t| t.translate_y),
                    (&self.scale_x, |t| t.scale_x),
                    (&self.scale_y, |t| t.scale_y),
                ];
                for (attr, field) in pick {
                    let solve = solve.clone();
                    attr.set(AttributeValue::computed(move || field(&solve())));
                }
            }
            FollowMode::Center => {
                let (w, h) = (frame.width, frame.height);
                let sx = self.scale_x.clone();
                let bx = bounds_now.clone();
                let fallback_x = self.translate_x.get();
                self.translate_x.set(AttributeValue::computed(move || match bx() {
                    Some((x0, _, x1, _)) => w / 2.0 - sx.get() * (x0 + x1) / 2.0,
                    None => fallback_x,
                }));
                let sy = self.scale_y.clone();
                let fallback_y = self.translate_y.get();
                self.translate_y
                    .set(AttributeValue::computed(move || match bounds_now() {
                        Some((_, y0, _, y1)) => h / 2.0 - sy.get() * (y0 + y1) / 2.0,
                        None => fallback_y,
                    }));
            }
        }
        self.following.set(true);
        Ok(())
    }

    /// Shifts the specified translate by a screen-space delta.
    pub fn apply_user_pan(&self, dx: f64, dy: f64) -> Result<()> {
        let t = self.settled();
        self.set_transform(Transform {
            translate_x: t.translate_x + dx,
            translate_y: t.translate_y + dy,
            ..t
        })
    }

    /// Multiplies the specified scales by `factor`, keeping whatever data
    /// point sits under the screen `anchor` in place.
    pub fn apply_user_zoom(&self, factor: f64, anchor: (f64, f64)) -> Result<()> {
        if !factor.is_finite() || factor <= 0.0 {
            return Err(Error::InvalidScale(factor));
        }
        let t = self.settled();
        let (ax, ay) = anchor;
        self.set_transform(Transform {
            translate_x: ax - factor * (ax - t.translate_x),
            translate_y: ay - factor * (ay - t.translate_y),
            scale_x: t.scale_x * factor,
            scale_y: t.scale_y * factor,
        })
    }

    /// Specified values, or the current solution while following.
    fn settled(&self) -> Transform {
        if self.following.get() {
            self.momentary()
        } else {
            self.specified()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::SignalState;
    use crate::value::Value;

    fn unit() -> ViewportTransform {
        ViewportTransform::new(Domain::unit(), 100.0, 100.0).unwrap()
    }

    fn close(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
        (a.0 - b.0).abs() <= tol && (a.1 - b.1).abs() <= tol
    }

    fn dot(id: &str, x: f64, y: f64) -> Mark {
        Mark::builder(id).attr("x", x).attr("y", y).build().unwrap()
    }

    #[test]
    fn identity_mapping() {
        let t = unit();
        assert_eq!(t.map_point((0.5, 0.5)), (50.0, 50.0));
        assert_eq!(t.invert_point((50.0, 50.0)), (0.5, 0.5));
    }

    #[test]
    fn scale_and_translate() {
        let t = unit();
        t.set_transform(Transform {
            scale_x: 2.0,
            scale_y: 2.0,
            ..Transform::IDENTITY
        })
        .unwrap();
        assert_eq!(t.map_point((0.5, 0.0)).0, 100.0);
        t.set_transform(Transform {
            translate_x: 10.0,
            ..Transform::IDENTITY
        })
        .unwrap();
        assert_eq!(t.map_point((0.0, 0.0)), (10.0, 0.0));
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert!(ViewportTransform::new(Domain::new(1.0, 1.0, 0.0, 1.0), 10.0, 10.0).is_err());
        assert!(ViewportTransform::new(Domain::unit(), 0.0, 10.0).is_err());
        assert_eq!(
            unit().set_transform(Transform {
                scale_x: 0.0,
                ..Transform::IDENTITY
            }),
            Err(Error::InvalidScale(0.0))
        );
        assert!(unit().apply_user_zoom(-1.0, (0.0, 0.0)).is_err());
        assert_eq!(
            unit()
                .zoom_to(
                    &[],
                    specified_position("x", "y"),
                    ZoomOptions::default(),
                    AnimationSpec::new(1.0),
                    &FrameClock::new()
                )
                .unwrap_err(),
            Error::EmptyMarkSet
        );
        let opts = ZoomOptions {
            padding: 0.5,
            ..Default::default()
        };
        assert!(unit()
            .fit_transform(&[dot("a", 0.0, 0.0)], specified_position("x", "y"), opts)
            .is_err());
    }

    #[test]
    fn pan_shifts_everything() {
        let t = unit();
        let before = t.map_point((0.3, 0.7));
        t.apply_user_pan(10.0, 0.0).unwrap();
        let after = t.map_point((0.3, 0.7));
        assert_eq!((after.0 - before.0, after.1 - before.1), (10.0, 0.0));
    }

    #[test]
    fn zoom_keeps_anchor() {
        let t = unit();
        t.set_transform(Transform {
            translate_x: 7.0,
            translate_y: -3.0,
            scale_x: 1.5,
            scale_y: 0.8,
        })
        .unwrap();
        let p = (0.42, 0.13);
        let anchor = t.map_point(p);
        t.apply_user_zoom(2.0, anchor).unwrap();
        assert!(close(t.map_point(p), anchor, 1e-9));
        let before = t.specified();
        t.apply_user_zoom(1.0, (3.0, 3.0)).unwrap();
        let after = t.specified();
        assert!(close(
            (after.translate_x, after.translate_y),
            (before.translate_x, before.translate_y),
            1e-12
        ));
        assert_eq!((after.scale_x, after.scale_y), (before.scale_x, before.scale_y));
    }

    #[test]
    fn zoom_single_mark_centers_at_max_scale() {
        // zero extent: scale = max (10); center = 50 - 10 * (0.2 * 100) = -150
        let t = unit();
        let clock = FrameClock::new();
        let sig = t
            .zoom_to(
                &[dot("a", 0.2, 0.6)],
                specified_position("x", "y"),
                ZoomOptions::default(),
                AnimationSpec::new(100.0),
                &clock,
            )
            .unwrap();
        t.advance(100.0).unwrap();
        assert_eq!(sig.state(), SignalState::Finished);
        let s = t.momentary();
        assert_eq!((s.scale_x, s.scale_y), (10.0, 10.0));
        assert_eq!((s.translate_x, s.translate_y), (50.0 - 200.0, 50.0 - 600.0));
        assert!(close(t.map_point((0.2, 0.6)), (50.0, 50.0), 1e-9));
    }

    #[test]
    fn zoom_full_domain_is_identity() {
        let t = unit();
        t.set_transform(Transform {
            translate_x: 30.0,
            translate_y: 5.0,
            scale_x: 3.0,
            scale_y: 3.0,
        })
        .unwrap();
        let marks = [dot("a", 0.0, 0.0), dot("b", 1.0, 1.0)];
        let target = t
            .fit_transform(&marks, specified_position("x", "y"), ZoomOptions::default())
            .unwrap();
        assert_eq!(target, Transform::IDENTITY);
    }

    #[test]
    fn per_axis_fit() {
        let t = unit();
        let marks = [dot("a", 0.0, 0.25), dot("b", 0.5, 0.75)];
        let uni = t
            .fit_transform(&marks, specified_position("x", "y"), ZoomOptions::default())
            .unwrap();
        assert_eq!((uni.scale_x, uni.scale_y), (2.0, 2.0));
        let per = t
            .fit_transform(
                &marks,
                specified_position("x", "y"),
                ZoomOptions {
                    padding: 0.1,
                    fit: FitMode::PerAxis,
                },
            )
            .unwrap();
        assert!((per.scale_x - 1.6).abs() < 1e-12 && (per.scale_y - 1.6).abs() < 1e-12);
    }

    #[test]
    fn interrupted_zoom_is_continuous() {
        let t = unit();
        let clock = FrameClock::new();
        let pos = specified_position("x", "y");
        let first = t
            .zoom_to(
                &[dot("a", 0.1, 0.1), dot("b", 0.3, 0.2)],
                pos.clone(),
                ZoomOptions::default(),
                AnimationSpec::new(200.0),
                &clock,
            )
            .unwrap();
        clock.tick(80.0).unwrap();
        t.advance(80.0).unwrap();
        let probe = (0.77, 0.31);
        let before = t.map_point_at(probe, &clock);
        t.zoom_to(
            &[dot("c", 0.9, 0.9)],
            pos,
            ZoomOptions::default(),
            AnimationSpec::new(200.0),
            &clock,
        )
        .unwrap();
        assert_eq!(first.state(), SignalState::Interrupted);
        assert!(close(t.map_point_at(probe, &clock), before, 1e-9));
    }

    #[test]
    fn round_trip_mid_animation() {
        let t = unit();
        let clock = FrameClock::new();
        t.animate_transform(
            Transform {
                translate_x: -40.0,
                translate_y: 12.0,
                scale_x: 3.0,
                scale_y: 0.5,
            },
            AnimationSpec::new(100.0),
            &clock,
        )
        .unwrap();
        for step in 1..10 {
            t.advance(step as f64 * 10.0).unwrap();
            for p in [(0.0, 0.0), (0.25, 0.9), (1.3, -0.2)] {
                assert!(close(t.invert_point(t.map_point(p)), p, 1e-9));
            }
        }
    }

    #[test]
    fn follow_keeps_moving_mark_centered() {
        let t = unit();
        let clock = FrameClock::new();
        let m = dot("a", 0.1, 0.5);
        m.animate_to("x", 0.9, AnimationSpec::new(160.0), &clock).unwrap();
        t.follow(vec![m.clone()], momentary_position("x", "y"), FollowOptions::default())
            .unwrap();
        for _ in 0..12 {
            let now = clock.tick(16.0).unwrap();
            m.advance(now).unwrap();
            t.advance(now).unwrap();
            let p = (m.number("x").unwrap(), m.number("y").unwrap());
            assert!(close(t.map_point(p), (50.0, 50.0), 1e-9), "{p:?}");
        }
        assert_eq!(t.momentary().scale_x, 10.0);
    }

    #[test]
    fn follow_static_marks_is_constant() {
        let t = unit();
        t.follow(
            vec![dot("a", 0.2, 0.2), dot("b", 0.4, 0.6)],
            momentary_position("x", "y"),
            FollowOptions::default(),
        )
        .unwrap();
        t.advance(0.0).unwrap();
        let first = t.momentary();
        assert!(!t.advance(16.0).unwrap());
        assert_eq!(t.momentary(), first);
    }

    #[test]
    fn center_mode_keeps_zoom() {
        let t = unit();
        t.set_transform(Transform {
            scale_x: 2.0,
            scale_y: 2.0,
            ..Transform::IDENTITY
        })
        .unwrap();
        let m = dot("a", 0.3, 0.3);
        let opts = FollowOptions {
            mode: FollowMode::Center,
            ..Default::default()
        };
        t.follow(vec![m.clone()], momentary_position("x", "y"), opts).unwrap();
        m.set("x", Value::from(0.6)).unwrap();
        m.advance(0.0).unwrap();
        t.advance(0.0).unwrap();
        assert_eq!(t.momentary().scale_x, 2.0);
        assert!(close(t.map_point((0.6, 0.3)), (50.0, 50.0), 1e-9));
    }

    #[test]
    fn user_pan_cancels_follow() {
        let t = unit();
        let m = dot("a", 0.3, 0.3);
        t.follow(vec![m.clone()], momentary_position("x", "y"), FollowOptions::default())
            .unwrap();
        t.advance(0.0).unwrap();
        let at_pan = t.momentary();
        t.apply_user_pan(5.0, 0.0).unwrap();
        assert!(!t.is_following());
        m.set("x", Value::from(0.9)).unwrap();
        m.advance(10.0).unwrap();
        t.advance(10.0).unwrap();
        assert_eq!(
            t.momentary(),
            Transform {
                translate_x: at_pan.translate_x + 5.0,
                ..at_pan
            }
        );
    }
}
