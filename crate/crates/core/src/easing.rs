//! Easing curves and interpolators.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Maps normalized progress `u` in `[0, 1]` to eased progress.
///
/// Input is clamped; output is not, so custom overshoot curves work.
#[derive(Clone, Default)]
pub enum Easing {
    #[default]
    Linear,
    EaseInCubic,
    EaseOutCubic,
    EaseInOutCubic,
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl Easing {
    pub fn custom(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Easing::Custom(Arc::new(f))
    }

    pub fn evaluate(&self, u: f64) -> f64 {
        let u = if u.is_nan() { 0.0 } else { u.clamp(0.0, 1.0) };
        match self {
            Easing::Linear => u,
            Easing::EaseInCubic => u * u * u,
            Easing::EaseOutCubic => {
                let v = 1.0 - u;
                1.0 - v * v * v
            }
            Easing::EaseInOutCubic => {
                if u < 0.5 {
                    4.0 * u * u * u
                } else {
                    let v = -2.0 * u + 2.0;
                    1.0 - v * v * v / 2.0
                }
            }
            Easing::Custom(f) => f(u),
        }
    }
}

impl fmt::Debug for Easing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Easing::Linear => f.write_str("Linear"),
            Easing::EaseInCubic => f.write_str("EaseInCubic"),
            Easing::EaseOutCubic => f.write_str("EaseOutCubic"),
            Easing::EaseInOutCubic => f.write_str("EaseInOutCubic"),
            Easing::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Named curves. Starts with the four built-ins; callers add their own.
#[derive(Debug, Clone)]
pub struct EasingRegistry {
    curves: HashMap<String, Easing>,
}

impl Default for EasingRegistry {
    fn default() -> Self {
        let mut curves = HashMap::new();
        curves.insert("linear".to_string(), Easing::Linear);
        curves.insert("ease-in-cubic".to_string(), Easing::EaseInCubic);
        curves.insert("ease-out-cubic".to_string(), Easing::EaseOutCubic);
        curves.insert("ease-in-out-cubic".to_string(), Easing::EaseInOutCubic);
        Self { curves }
    }
}

impl EasingRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers (or replaces) a curve under `name`.
    pub fn register(&mut self, name: impl Into<String>, easing: Easing) {
        self.curves.insert(name.into(), easing);
    }

    pub fn get(&self, name: &str) -> Option<&Easing> {
        self.curves.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.curves.keys().map(String::as_str)
    }
}

/// `v0 + (v1 - v0) * t`.
pub fn interpolate_numeric(v0: f64, v1: f64, t: f64) -> f64 {
    debug_assert!(v0.is_finite() && v1.is_finite(), "non-finite interpolation endpoint");
    v0 + (v1 - v0) * t
}

/// Built-in interpolation for a value kind. Implementations must return
/// `from` at `t = 0` and `to` at `t = 1`.
pub trait Interpolate: Sized {
    fn interpolate(from: &Self, to: &Self, t: f64) -> Self;
}

impl Interpolate for f64 {
    fn interpolate(from: &Self, to: &Self, t: f64) -> Self {
        interpolate_numeric(*from, *to, t)
    }
}

impl Interpolate for f32 {
    fn interpolate(from: &Self, to: &Self, t: f64) -> Self {
        interpolate_numeric(f64::from(*from), f64::from(*to), t) as f32
    }
}

/// Strings are not blended: they hold the start value until the end.
impl Interpolate for String {
    fn interpolate(from: &Self, to: &Self, t: f64) -> Self {
        if t >= 1.0 {
            to.clone()
        } else {
            from.clone()
        }
    }
}

/// Caller-supplied interpolator, overriding [`Interpolate`] for one animation.
pub type Interpolator<V> = Arc<dyn Fn(&V, &V, f64) -> V + Send + Sync>;
