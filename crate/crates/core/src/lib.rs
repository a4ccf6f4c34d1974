//! State management for large animated visualizations.
//!
//! The crate tracks *what* a visualization looks like over time and leaves
//! drawing to the caller. Marks hold animatable attributes; render groups
//! advance them once per frame, visit only marks that can have changed, and
//! choreograph entry and exit. Helpers cover hit-testing ([`PositionMap`])
//! and animated pan/zoom ([`ViewportTransform`]).
//!
//! ```
//! use vizstate::{AnimationSpec, FrameClock, Mark, MarkRenderGroup, Value};
//!
//! let clock = FrameClock::new();
//! let mut group = MarkRenderGroup::new();
//! group.add_mark(Mark::builder("p0").attr("x", 250.0).attr("y", 400.0).build()?)?;
//! group.animate_all("x", Value::from(300.0), AnimationSpec::new(1000.0), &clock)?;
//!
//! let t = clock.tick(500.0)?;
//! if group.advance(t)? {
//!     for mark in group.stage() {
//!         let (x, y) = (mark.number("x")?, mark.number("y")?);
//!         assert_eq!((x, y), (275.0, 400.0));
//!     }
//! }
//! # Ok::<(), vizstate::Error>(())
//! ```
//!
//! Everything here is single-threaded: handles are `Rc`-based and all
//! reads and writes happen inside the caller's frame loop.

pub mod attribute;
pub mod bench;
pub mod clock;
pub mod easing;
pub mod error;
pub mod mark;
pub mod position_map;
pub mod render_context;
pub mod render_group;
pub mod scales;
pub mod signal;
pub mod staging;
pub mod value;

pub use attribute::{Animatable, AnimationPhase, AnimationSpec, Attribute, AttributeValue, Preload};
pub use clock::{FrameClock, Millis};
pub use easing::{interpolate_numeric, Easing, EasingRegistry, Interpolate, Interpolator};
pub use error::{Error, Result};
pub use mark::{ListenerId, Mark, MarkBuilder, MarkId, WeakMark};
pub use position_map::{Hit, PositionMap};
pub use render_context::RenderContext;
pub use render_group::{MarkRenderGroup, Tracking};
pub use scales::{Domain, FitMode, FollowMode, FollowOptions, Transform, ViewportTransform, ZoomOptions};
pub use signal::{CompletionSignal, SignalState};
pub use staging::{StageEvent, StageState, StagingConfig, VisibleSetChange};
pub use value::Value;
