//! Animatable attributes.
//!
//! An [`Attribute`] holds a static or computed base value and at most one
//! animation. Its momentary value is a pure function of absolute time, so
//! the number of `advance` steps taken never affects what `get` returns.

use std::cell::RefCell;
use std::fmt;
use std::rc::Rc;

use crate::clock::{FrameClock, Millis};
use crate::easing::{Easing, Interpolate, Interpolator};
use crate::error::{Error, Result};
use crate::signal::{CompletionSignal, SignalState};

/// Value kinds an attribute can hold.
pub trait Animatable: Clone + PartialEq + Interpolate + 'static {}

impl<T: Clone + PartialEq + Interpolate + 'static> Animatable for T {}

pub enum AttributeValue<V> {
    Static(V),
    /// Re-evaluated on every read. Must return the same value for every
    /// read between two consecutive advances.
    Computed(Rc<dyn Fn() -> V>),
}

impl<V: Clone> AttributeValue<V> {
    pub fn computed(f: impl Fn() -> V + 'static) -> Self {
        AttributeValue::Computed(Rc::new(f))
    }

    pub fn evaluate(&self) -> V {
        match self {
            AttributeValue::Static(v) => v.clone(),
            AttributeValue::Computed(f) => f(),
        }
    }

    pub fn is_static(&self) -> bool {
        matches!(self, AttributeValue::Static(_))
    }
}

impl<V: Clone> Clone for AttributeValue<V> {
    fn clone(&self) -> Self {
        match self {
            AttributeValue::Static(v) => AttributeValue::Static(v.clone()),
            AttributeValue::Computed(f) => AttributeValue::Computed(f.clone()),
        }
    }
}

impl<V> From<V> for AttributeValue<V> {
    fn from(v: V) -> Self {
        AttributeValue::Static(v)
    }
}

impl<V: fmt::Debug> fmt::Debug for AttributeValue<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttributeValue::Static(v) => f.debug_tuple("Static").field(v).finish(),
            AttributeValue::Computed(_) => f.write_str("Computed(..)"),
        }
    }
}

/// Timing and shape of one animation.
pub struct AnimationSpec<V> {
    pub duration: Millis,
    pub delay: Millis,
    pub easing: Easing,
    /// Overrides the value kind's [`Interpolate`] impl when set.
    pub interpolator: Option<Interpolator<V>>,
}

impl<V> AnimationSpec<V> {
    pub fn new(duration: Millis) -> Self {
        Self {
            duration,
            delay: 0.0,
            easing: Easing::Linear,
            interpolator: None,
        }
    }

    pub fn with_delay(mut self, delay: Millis) -> Self {
        self.delay = delay;
        self
    }

    pub fn with_easing(mut self, easing: Easing) -> Self {
        self.easing = easing;
        self
    }

    pub fn with_interpolator(mut self, f: impl Fn(&V, &V, f64) -> V + Send + Sync + 'static) -> Self {
        self.interpolator = Some(std::sync::Arc::new(f));
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.duration.is_finite() || self.duration < 0.0 {
            return Err(Error::InvalidSpec(format!("duration {}", self.duration)));
        }
        if !self.delay.is_finite() || self.delay < 0.0 {
            return Err(Error::InvalidSpec(format!("delay {}", self.delay)));
        }
        Ok(())
    }
}

impl<V> Clone for AnimationSpec<V> {
    fn clone(&self) -> Self {
        Self {
            duration: self.duration,
            delay: self.delay,
            easing: self.easing.clone(),
            interpolator: self.interpolator.clone(),
        }
    }
}

impl<V> fmt::Debug for AnimationSpec<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AnimationSpec")
            .field("duration", &self.duration)
            .field("delay", &self.delay)
            .field("easing", &self.easing)
            .field("interpolator", &self.interpolator.as_ref().map(|_| ".."))
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnimationPhase {
    /// Waiting out the delay.
    Pending,
    Running,
    Finished,
    Interrupted,
}

struct Animation<V> {
    start_value: V,
    target: AttributeValue<V>,
    start_time: Millis,
    spec: AnimationSpec<V>,
    signal: CompletionSignal,
}

impl<V: Animatable> Animation<V> {
    fn begin(&self) -> Millis {
        self.start_time + self.spec.delay
    }

    fn end(&self) -> Millis {
        self.begin() + self.spec.duration
    }

    fn phase_at(&self, t: Millis) -> AnimationPhase {
        if t < self.begin() {
            AnimationPhase::Pending
        } else if t < self.end() {
            AnimationPhase::Running
        } else {
            AnimationPhase::Finished
        }
    }

    fn value_at(&self, t: Millis) -> V {
        match self.phase_at(t) {
            AnimationPhase::Pending => self.start_value.clone(),
            AnimationPhase::Running => {
                let u = (t - self.begin()) / self.spec.duration;
                let eased = self.spec.easing.evaluate(u);
                let target = self.target.evaluate();
                match &self.spec.interpolator {
                    Some(f) => f(&self.start_value, &target, eased),
                    None => V::interpolate(&self.start_value, &target, eased),
                }
            }
            _ => self.target.evaluate(),
        }
    }
}

/// The four values a shader needs to replay an animation from the current
/// time alone.
#[derive(Debug, Clone, PartialEq)]
pub struct Preload<V> {
    pub start_value: V,
    pub end_value: V,
    pub start_time: Millis,
    pub end_time: Millis,
}

impl<V: Animatable> Preload<V> {
    /// Consumer-side reconstruction, applying the same easing curve the
    /// animation was started with.
    pub fn value_at(&self, t: Millis, easing: &Easing) -> V {
        if t >= self.end_time {
            return self.end_value.clone();
        }
        let u = (t - self.start_time) / (self.end_time - self.start_time);
        V::interpolate(&self.start_value, &self.end_value, easing.evaluate(u))
    }
}

struct State<V> {
    base: AttributeValue<V>,
    active: Option<Box<Animation<V>>>,
    changed: bool,
    preloadable: bool,
    time: Millis,
    /// Momentary value observed at the last advance.
    cached: Option<V>,
    /// `cached` may be returned from `get` without re-evaluating.
    cache_fresh: bool,
    observer: Option<Rc<dyn Fn()>>,
}

impl<V: Animatable> State<V> {
    fn value_at(&self, t: Millis) -> V {
        match &self.active {
            Some(anim) => anim.value_at(t),
            None => self.base.evaluate(),
        }
    }

    fn depends_on_computed(&self) -> bool {
        !self.base.is_static() || self.active.as_ref().is_some_and(|a| !a.target.is_static())
    }

    /// Drops the active animation. An animation already past its end at
    /// `now` counts as finished, and its target becomes the base.
    fn retire_active(&mut self, now: Millis) -> Option<(CompletionSignal, SignalState)> {
        let anim = self.active.take()?;
        if now >= anim.end() {
            self.base = anim.target;
            Some((anim.signal, SignalState::Finished))
        } else {
            Some((anim.signal, SignalState::Interrupted))
        }
    }
}

/// Shared handle to one animatable property. Clones refer to the same
/// attribute, which is how computed values read other attributes.
pub struct Attribute<V>(Rc<RefCell<State<V>>>);

impl<V> Clone for Attribute<V> {
    fn clone(&self) -> Self {
        Self(self.0.clone())
    }
}

impl<V: Animatable> Attribute<V> {
    pub fn new(value: impl Into<AttributeValue<V>>) -> Self {
        Self(Rc::new(RefCell::new(State {
            base: value.into(),
            active: None,
            changed: true,
            preloadable: false,
            time: 0.0,
            cached: None,
            cache_fresh: false,
            observer: None,
        })))
    }

    pub fn computed(f: impl Fn() -> V + 'static) -> Self {
        Self::new(AttributeValue::computed(f))
    }

    /// Flags the attribute for [`Attribute::preload`].
    pub fn preloadable(self) -> Self {
        self.set_preloadable(true);
        self
    }

    pub fn set_preloadable(&self, on: bool) {
        self.0.borrow_mut().preloadable = on;
    }

    pub fn is_preloadable(&self) -> bool {
        self.0.borrow().preloadable
    }

    /// Time of the last advance.
    pub fn time(&self) -> Millis {
        self.0.borrow().time
    }

    /// Momentary value at the last advanced time.
    pub fn get(&self) -> V {
        let s = self.0.borrow();
        if s.cache_fresh {
            if let Some(v) = &s.cached {
                return v.clone();
            }
        }
        s.value_at(s.time)
    }

    /// Momentary value at an arbitrary time, given the current animation.
    pub fn get_at(&self, t: Millis) -> V {
        self.0.borrow().value_at(t)
    }

    /// The value this attribute will settle at.
    pub fn get_specified(&self) -> V {
        let s = self.0.borrow();
        match &s.active {
            Some(anim) => anim.target.evaluate(),
            None => s.base.evaluate(),
        }
    }

    /// Replaces the base value, cancelling any animation.
    pub fn set(&self, value: impl Into<AttributeValue<V>>) {
        let (retired, observer) = {
            let mut s = self.0.borrow_mut();
            let now = s.time;
            let retired = s.retire_active(now);
            s.base = value.into();
            s.changed = true;
            s.cache_fresh = false;
            (retired, s.observer.clone())
        };
        if let Some((signal, state)) = retired {
            signal.resolve(state);
        }
        if let Some(notify) = observer {
            notify();
        }
    }

    pub fn animate_to(&self, target: V, spec: AnimationSpec<V>, clock: &FrameClock) -> Result<CompletionSignal> {
        self.animate(AttributeValue::Static(target), spec, clock)
    }

    /// Starts an animation from the momentary value at `clock.now()`. A
    /// computed target is re-evaluated every frame.
    pub fn animate(
        &self,
        target: impl Into<AttributeValue<V>>,
        spec: AnimationSpec<V>,
        clock: &FrameClock,
    ) -> Result<CompletionSignal> {
        spec.validate()?;
        let now = clock.now();
        let start_value = self.get_at(now);
        let signal = CompletionSignal::pending();
        let (retired, observer) = {
            let mut s = self.0.borrow_mut();
            let retired = s.retire_active(now);
            s.active = Some(Box::new(Animation {
                start_value,
                target: target.into(),
                start_time: now,
                spec,
                signal: signal.clone(),
            }));
            s.changed = true;
            s.cache_fresh = false;
            (retired, s.observer.clone())
        };
        if let Some((old, state)) = retired {
            old.resolve(state);
        }
        if let Some(notify) = observer {
            notify();
        }
        Ok(signal)
    }

    /// Steps to `to`, settling a finished animation. Returns whether the
    /// momentary value changed since the previous advance or the attribute
    /// was mutated in between.
    pub fn advance(&self, to: Millis) -> Result<bool> {
        self.advance_tracked(to).map(|(changed, _)| changed)
    }

    /// Like [`advance`](Self::advance), also reporting whether an animation
    /// is still installed afterwards.
    pub(crate) fn advance_tracked(&self, to: Millis) -> Result<(bool, bool)> {
        let mut finished = None;
        {
            let mut s = self.0.borrow_mut();
            if to < s.time {
                return Err(Error::TimeRegression { from: s.time, to });
            }
            s.time = to;
            if s.active.is_none() {
                // idle, static and untouched since the last advance
                if s.cache_fresh && !s.changed && s.cached.is_some() {
                    return Ok((false, false));
                }
            } else if s.active.as_ref().is_some_and(|a| to >= a.end()) {
                let anim = s.active.take().expect("checked above");
                s.base = anim.target;
                finished = Some(anim.signal);
            }
        }
        // Computed closures run under a shared borrow only.
        let value = self.0.borrow().value_at(to);
        let (changed, animating) = {
            let mut s = self.0.borrow_mut();
            let mut changed = std::mem::take(&mut s.changed) || finished.is_some();
            if s.cached.as_ref() != Some(&value) {
                changed = true;
            }
            s.cached = Some(value);
            s.cache_fresh = !s.depends_on_computed();
            (changed, s.active.is_some())
        };
        if let Some(signal) = finished {
            signal.resolve(SignalState::Finished);
        }
        Ok((changed, animating))
    }

    /// Start/end values and times of the current animation, or a degenerate
    /// `(v, v, now, now)` when idle. A computed target is sampled once.
    pub fn preload(&self, clock: &FrameClock) -> Result<Preload<V>> {
        let now = clock.now();
        let s = self.0.borrow();
        if !s.preloadable {
            return Err(Error::NotPreloadable);
        }
        match &s.active {
            Some(anim) if now < anim.end() => Ok(Preload {
                start_value: anim.start_value.clone(),
                end_value: anim.target.evaluate(),
                start_time: anim.begin(),
                end_time: anim.end(),
            }),
            _ => {
                let v = s.value_at(now);
                Ok(Preload {
                    start_value: v.clone(),
                    end_value: v,
                    start_time: now,
                    end_time: now,
                })
            }
        }
    }

    /// Phase of the active animation at the last advanced time.
    pub fn phase(&self) -> Option<AnimationPhase> {
        let s = self.0.borrow();
        s.active.as_ref().map(|a| a.phase_at(s.time))
    }

    /// True while an animation is installed (pending, running, or due to
    /// settle on the next advance).
    pub fn is_animating(&self) -> bool {
        self.0.borrow().active.is_some()
    }

    /// Signal of the active animation, if any.
    pub fn active_signal(&self) -> Option<CompletionSignal> {
        self.0.borrow().active.as_ref().map(|a| a.signal.clone())
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Rc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn set_observer(&self, observer: Option<Rc<dyn Fn()>>) {
        self.0.borrow_mut().observer = observer;
    }
}

impl<V: Animatable + fmt::Debug> fmt::Debug for Attribute<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.borrow();
        f.debug_struct("Attribute")
            .field("base", &s.base)
            .field("animating", &s.active.is_some())
            .field("time", &s.time)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn at(t: Millis) -> FrameClock {
        FrameClock::starting_at(t)
    }

    fn linear(ms: Millis) -> AnimationSpec<f64> {
        AnimationSpec::new(ms)
    }

    #[test]
    fn static_value_reads_back() {
        let a = Attribute::new(250.0);
        assert_eq!(a.get(), 250.0);
        assert_eq!(a.get_specified(), 250.0);
    }

    #[test]
    fn linear_midpoint() {
        let a = Attribute::new(0.0);
        a.animate_to(10.0, linear(1000.0), &at(0.0)).unwrap();
        a.advance(500.0).unwrap();
        assert_eq!(a.get(), 5.0);
        assert_eq!(a.get_specified(), 10.0);
    }

    #[test]
    fn delay_holds_start_value() {
        let a = Attribute::new(0.0);
        a.animate_to(10.0, linear(1000.0).with_delay(200.0), &at(0.0)).unwrap();
        a.advance(100.0).unwrap();
        assert_eq!(a.get(), 0.0);
        assert_eq!(a.phase(), Some(AnimationPhase::Pending));
        a.advance(700.0).unwrap();
        assert_eq!(a.get(), 5.0);
        assert_eq!(a.phase(), Some(AnimationPhase::Running));
    }

    #[test]
    fn computed_specified_value() {
        let x = Attribute::new(250.0);
        let xr = x.clone();
        let doubled = Attribute::computed(move || 2.0 * xr.get());
        assert_eq!(doubled.get_specified(), 500.0);
        assert_eq!(doubled.get(), 500.0);
    }

    #[test]
    fn set_replaces_and_interrupts() {
        let a = Attribute::new(0.0);
        a.set(5.0);
        assert_eq!(a.get(), 5.0);

        let a = Attribute::new(0.0);
        let sig = a.animate_to(10.0, linear(1000.0), &at(0.0)).unwrap();
        a.advance(500.0).unwrap();
        a.set(5.0);
        assert_eq!(a.get(), 5.0);
        assert_eq!(sig.state(), SignalState::Interrupted);
        assert!(!a.is_animating());

        a.set(AttributeValue::computed(|| 7.0));
        assert_eq!(a.get(), 7.0);
    }

    #[test]
    fn animate_to_finishes_exactly() {
        let a = Attribute::new(0.0);
        let sig = a.animate_to(10.0, linear(1000.0), &at(0.0)).unwrap();
        a.advance(999.0).unwrap();
        assert_eq!(sig.state(), SignalState::Pending);
        a.advance(1000.0).unwrap();
        assert_eq!(a.get(), 10.0);
        assert_eq!(sig.state(), SignalState::Finished);
    }

    #[test]
    fn interruption_starts_from_momentary_value() {
        // First leg 0 -> 10 over [0, 1000] is at 5 when t = 500.
        // Second leg 5 -> 0 over [500, 1500] is halfway at t = 1000: 2.5.
        let a = Attribute::new(0.0);
        let first = a.animate_to(10.0, linear(1000.0), &at(0.0)).unwrap();
        a.advance(500.0).unwrap();
        a.animate_to(0.0, linear(1000.0), &at(500.0)).unwrap();
        assert_eq!(first.state(), SignalState::Interrupted);
        assert_eq!(a.get_at(500.0), 5.0);
        a.advance(1000.0).unwrap();
        assert_eq!(a.get(), 2.5);
    }

    #[test]
    fn zero_duration_settles_after_delay() {
        let a = Attribute::new(0.0);
        let sig = a.animate_to(10.0, linear(0.0).with_delay(50.0), &at(0.0)).unwrap();
        a.advance(49.0).unwrap();
        assert_eq!(a.get(), 0.0);
        assert_eq!(sig.state(), SignalState::Pending);
        assert!(a.advance(50.0).unwrap());
        assert_eq!(a.get(), 10.0);
        assert_eq!(sig.state(), SignalState::Finished);
    }

    #[test]
    fn constant_computed_target_matches_static() {
        let a = Attribute::new(0.0);
        let b = Attribute::new(0.0);
        a.animate(AttributeValue::computed(|| 10.0), linear(1000.0), &at(0.0))
            .unwrap();
        b.animate_to(10.0, linear(1000.0), &at(0.0)).unwrap();
        for t in [0.0, 250.0, 600.0, 1000.0, 1200.0] {
            a.advance(t).unwrap();
            b.advance(t).unwrap();
            assert_eq!(a.get(), b.get());
        }
    }

    #[test]
    fn computed_target_tracks_moving_attribute() {
        // b: 0 -> 100 over 1000ms. a: 0 -> b over 500ms, re-evaluated each frame.
        // t=200: b=20, a progress 0.4 -> 8. t=500: a settles on b=50.
        let b = Attribute::new(0.0);
        b.animate_to(100.0, linear(1000.0), &at(0.0)).unwrap();
        let a = Attribute::new(0.0);
        let br = b.clone();
        let sig = a
            .animate(AttributeValue::computed(move || br.get()), linear(500.0), &at(0.0))
            .unwrap();
        for t in [100.0, 200.0] {
            b.advance(t).unwrap();
            a.advance(t).unwrap();
        }
        assert!((a.get() - 8.0).abs() < 1e-12);
        for t in [300.0, 400.0, 500.0] {
            b.advance(t).unwrap();
            a.advance(t).unwrap();
        }
        assert_eq!(sig.state(), SignalState::Finished);
        assert_eq!(a.get(), 50.0);
        // after finishing, the computed target became the base and keeps tracking
        b.advance(600.0).unwrap();
        a.advance(600.0).unwrap();
        assert_eq!(a.get(), 60.0);
    }

    #[test]
    fn set_interrupts_computed_animation() {
        let a = Attribute::new(0.0);
        let sig = a
            .animate(AttributeValue::computed(|| 3.0), linear(100.0), &at(0.0))
            .unwrap();
        a.set(1.0);
        assert_eq!(sig.state(), SignalState::Interrupted);
    }

    #[test]
    fn idle_attribute_goes_quiet() {
        let a = Attribute::new(1.0);
        assert!(a.advance(0.0).unwrap());
        assert!(!a.advance(16.0).unwrap());
        assert!(!a.advance(32.0).unwrap());
    }

    #[test]
    fn three_frame_schedule() {
        // 0 -> 10 over 300ms, frames every 100ms: changes at 100, 200, and
        // the final snap at 300; nothing afterwards.
        let a = Attribute::new(0.0);
        a.advance(0.0).unwrap();
        a.animate_to(10.0, linear(300.0), &at(0.0)).unwrap();
        let got: Vec<bool> = [100.0, 200.0, 300.0, 400.0, 500.0]
            .into_iter()
            .map(|t| a.advance(t).unwrap())
            .collect();
        assert_eq!(got, vec![true, true, true, false, false]);
    }

    #[test]
    fn computed_dependency_change_reports_true() {
        let src = Attribute::new(1.0);
        let sr = src.clone();
        let a = Attribute::computed(move || sr.get() * 3.0);
        a.advance(0.0).unwrap();
        assert!(!a.advance(10.0).unwrap());
        src.set(2.0);
        assert!(a.advance(20.0).unwrap());
        assert_eq!(a.get(), 6.0);
    }

    #[test]
    fn time_regression_rejected() {
        let a = Attribute::new(0.0);
        a.advance(100.0).unwrap();
        assert_eq!(a.advance(50.0), Err(Error::TimeRegression { from: 100.0, to: 50.0 }));
        assert_eq!(a.time(), 100.0);
    }

    #[test]
    fn invalid_spec_rejected() {
        let a = Attribute::new(0.0);
        assert!(a.animate_to(1.0, linear(-1.0), &at(0.0)).is_err());
        assert!(a.animate_to(1.0, linear(1.0).with_delay(f64::NAN), &at(0.0)).is_err());
        assert!(!a.is_animating());
    }

    #[test]
    fn preload_examples() {
        let a = Attribute::new(250.0).preloadable();
        let clock = at(40.0);
        assert_eq!(
            a.preload(&clock).unwrap(),
            Preload {
                start_value: 250.0,
                end_value: 250.0,
                start_time: 40.0,
                end_time: 40.0
            }
        );

        let b = Attribute::new(0.0).preloadable();
        b.animate_to(10.0, linear(1000.0), &at(100.0)).unwrap();
        let p = b.preload(&at(100.0)).unwrap();
        assert_eq!(
            p,
            Preload {
                start_value: 0.0,
                end_value: 10.0,
                start_time: 100.0,
                end_time: 1100.0
            }
        );

        assert_eq!(Attribute::new(1.0).preload(&clock), Err(Error::NotPreloadable));
    }

    #[test]
    fn preload_reconstruction_matches_get() {
        let a = Attribute::new(-3.0).preloadable();
        let easing = Easing::EaseInOutCubic;
        let clock = at(20.0);
        a.animate_to(17.0, linear(800.0).with_delay(30.0).with_easing(easing.clone()), &clock)
            .unwrap();
        let p = a.preload(&clock).unwrap();
        for i in 0..100 {
            let t = p.start_time + (p.end_time - p.start_time) * f64::from(i) / 99.0;
            // shader-side formula, written out independently
            let u = ((t - p.start_time) / (p.end_time - p.start_time)).clamp(0.0, 1.0);
            let e = easing.evaluate(u);
            let gpu = p.start_value + (p.end_value - p.start_value) * e;
            assert!((gpu - a.get_at(t)).abs() < 1e-9, "t={t}");
            assert!((p.value_at(t, &easing) - a.get_at(t)).abs() < 1e-9);
        }
    }

    #[test]
    fn custom_interpolator_is_used() {
        let a = Attribute::new(1.0);
        let spec = linear(100.0).with_interpolator(|a: &f64, b: &f64, t| a * (b / a).powf(t));
        a.animate_to(100.0, spec, &at(0.0)).unwrap();
        a.advance(50.0).unwrap();
        assert!((a.get() - 10.0).abs() < 1e-9);
    }

    #[test]
    fn observer_sees_each_mutation() {
        let a = Attribute::new(0.0);
        let hits = Rc::new(std::cell::Cell::new(0));
        let h = hits.clone();
        a.set_observer(Some(Rc::new(move || h.set(h.get() + 1))));
        a.set(1.0);
        a.animate_to(2.0, linear(10.0), &at(0.0)).unwrap();
        a.advance(5.0).unwrap();
        a.advance(10.0).unwrap();
        assert_eq!(hits.get(), 2);
    }

    proptest! {
        #[test]
        fn step_invariance(
            from in -1e3f64..1e3,
            to in -1e3f64..1e3,
            duration in 1.0f64..2000.0,
            delay in 0.0f64..500.0,
            steps in 1usize..200,
        ) {
            let whole = Attribute::new(from);
            let stepped = Attribute::new(from);
            let clock = FrameClock::new();
            whole.animate_to(to, linear(duration).with_delay(delay), &clock).unwrap();
            stepped.animate_to(to, linear(duration).with_delay(delay), &clock).unwrap();
            let end = 1000.0;
            whole.advance(end).unwrap();
            for i in 1..=steps {
                stepped.advance(end * i as f64 / steps as f64).unwrap();
            }
            prop_assert!((whole.get() - stepped.get()).abs() <= 1e-9);
        }

        #[test]
        fn interruption_is_continuous(
            legs in proptest::collection::vec((-100.0f64..100.0, 1.0f64..500.0, 0.0f64..100.0, 1.0f64..300.0), 1..8)
        ) {
            let a = Attribute::new(0.0);
            let clock = FrameClock::new();
            for (target, duration, delay, gap) in legs {
                let before = a.get_at(clock.now());
                a.animate_to(target, linear(duration).with_delay(delay), &clock).unwrap();
                prop_assert!((a.get_at(clock.now()) - before).abs() <= 1e-9);
                let t = clock.tick(gap).unwrap();
                a.advance(t).unwrap();
            }
        }

        #[test]
        fn idle_momentary_equals_specified(v in -1e6f64..1e6, t in 0.0f64..1e4) {
            let a = Attribute::new(v);
            a.advance(t).unwrap();
            prop_assert_eq!(a.get(), a.get_specified());
        }
    }
}
