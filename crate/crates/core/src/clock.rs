//! Injected frame time.
//!
//! Nothing in this crate reads the wall clock. A [`FrameClock`] is a cheap,
//! shareable handle to a single millisecond counter; staging callbacks and
//! computed values capture clones of it when they need "now".

use std::cell::Cell;
use std::rc::Rc;

use crate::error::{Error, Result};

/// Milliseconds, fractional allowed.
pub type Millis = f64;

#[derive(Debug, Clone, Default)]
pub struct FrameClock {
    now: Rc<Cell<Millis>>,
}

impl FrameClock {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn starting_at(t: Millis) -> Self {
        assert!(t.is_finite() && t >= 0.0, "clock start must be finite and non-negative");
        Self {
            now: Rc::new(Cell::new(t)),
        }
    }

    /// Advances time by `dt` and returns the new time. A negative or
    /// non-finite step is rejected and leaves the clock untouched.
    pub fn tick(&self, dt: Millis) -> Result<Millis> {
        if !dt.is_finite() || dt < 0.0 {
            return Err(Error::InvalidTimeStep(dt));
        }
        let t = self.now.get() + dt;
        self.now.set(t);
        Ok(t)
    }

    pub fn now(&self) -> Millis {
        self.now.get()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_clock_reads_zero() {
        let clock = FrameClock::new();
        assert_eq!(clock.now(), 0.0);
        assert_eq!(clock.now(), clock.now());
    }

    #[test]
    fn tick_is_additive() {
        let clock = FrameClock::new();
        assert_eq!(clock.tick(16.667).unwrap(), 16.667);
        assert_eq!(clock.tick(0.0).unwrap(), 16.667);
        clock.tick(16.667).unwrap();
        clock.tick(16.667).unwrap();
        assert!((clock.now() - 50.001).abs() < 1e-9);
    }

    #[test]
    fn after_tick_five() {
        let clock = FrameClock::new();
        clock.tick(5.0).unwrap();
        assert_eq!(clock.now(), 5.0);
    }

    #[test]
    fn negative_step_rejected() {
        let clock = FrameClock::starting_at(10.0);
        assert_eq!(clock.tick(-1.0), Err(Error::InvalidTimeStep(-1.0)));
        assert!(clock.tick(f64::NAN).is_err());
        assert_eq!(clock.now(), 10.0);
    }

    #[test]
    fn clones_share_time() {
        let a = FrameClock::new();
        let b = a.clone();
        a.tick(3.0).unwrap();
        assert_eq!(b.now(), 3.0);
    }

    proptest::proptest! {
        #[test]
        fn now_is_non_decreasing(steps in proptest::collection::vec(0.0f64..100.0, 0..50)) {
            let clock = FrameClock::new();
            let mut prev = clock.now();
            for dt in steps {
                clock.tick(dt).unwrap();
                proptest::prop_assert!(clock.now() >= prev);
                prev = clock.now();
            }
        }
    }
}
