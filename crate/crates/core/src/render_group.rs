//! Render groups: ordered mark collections with listener-based dirty tracking.
//!
//! Each mark gets a change listener that drops its sequence number into the
//! group's active set. A frame advance visits only that set, and a mark
//! leaves the set once it has been advanced with no animation installed.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use crate::attribute::{AnimationSpec, AttributeValue};
use crate::clock::{FrameClock, Millis};
use crate::error::{Error, Result};
use crate::mark::{ListenerId, Mark, MarkId};
use crate::signal::CompletionSignal;
use crate::staging::{StageState, StagingConfig};
use crate::value::Value;

/// Which marks an advance visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Tracking {
    /// Only marks mutated or animating since they were last observed.
    #[default]
    Dirty,
    /// Every mark, every frame. Same results, used as a baseline.
    Naive,
}

pub(crate) struct Slot {
    pub(crate) mark: Mark,
    listener: ListenerId,
    pub(crate) stage: StageState,
    pub(crate) signal: Option<CompletionSignal>,
}

pub struct MarkRenderGroup {
    pub(crate) slots: BTreeMap<u64, Slot>,
    pub(crate) index: HashMap<MarkId, u64>,
    next_seq: u64,
    dirty: Rc<RefCell<BTreeSet<u64>>>,
    pub(crate) staging: Option<StagingConfig>,
    /// Marks in Entering or Exiting, waiting on a completion signal.
    pub(crate) transitioning: BTreeSet<u64>,
    last_time: Millis,
    tracking: Tracking,
    visits: usize,
}

impl Default for MarkRenderGroup {
    fn default() -> Self {
        Self::new()
    }
}

impl MarkRenderGroup {
    pub fn new() -> Self {
        Self {
            slots: BTreeMap::new(),
            index: HashMap::new(),
            next_seq: 0,
            dirty: Rc::new(RefCell::new(BTreeSet::new())),
            staging: None,
            transitioning: BTreeSet::new(),
            last_time: 0.0,
            tracking: Tracking::Dirty,
            visits: 0,
        }
    }

    pub fn with_marks(marks: impl IntoIterator<Item = Mark>) -> Result<Self> {
        let mut group = Self::new();
        for mark in marks {
            group.add_mark(mark)?;
        }
        Ok(group)
    }

    pub fn set_tracking(&mut self, tracking: Tracking) {
        self.tracking = tracking;
    }

    pub fn tracking(&self) -> Tracking {
        self.tracking
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn last_advance_time(&self) -> Millis {
        self.last_time
    }

    /// Marks visited by the most recent advance.
    pub fn last_visit_count(&self) -> usize {
        self.visits
    }

    /// Marks that the next advance will visit in dirty mode.
    pub fn active_count(&self) -> usize {
        self.dirty.borrow().len()
    }

    /// Adds a mark. It is visited on the next advance so its initial state
    /// is observed. In a staged group a new mark starts offstage.
    pub fn add_mark(&mut self, mark: Mark) -> Result<()> {
        if self.index.contains_key(mark.id().as_str()) {
            return Err(Error::DuplicateMark(mark.id().to_string()));
        }
        let seq = self.next_seq;
        self.next_seq += 1;
        let dirty = Rc::downgrade(&self.dirty);
        let listener = mark.on_change(move |_| {
            if let Some(dirty) = dirty.upgrade() {
                dirty.borrow_mut().insert(seq);
            }
        });
        let stage = if self.staging.is_some() {
            StageState::Offstage
        } else {
            StageState::Onstage
        };
        self.index.insert(mark.id().clone(), seq);
        self.slots.insert(
            seq,
            Slot {
                mark,
                listener,
                stage,
                signal: None,
            },
        );
        self.dirty.borrow_mut().insert(seq);
        Ok(())
    }

    /// Removes a mark and stops tracking it. Its animations are abandoned:
    /// nothing advances them through this group again.
    pub fn remove_mark(&mut self, id: &str) -> Result<Mark> {
        let seq = self
            .index
            .remove(id)
            .ok_or_else(|| Error::UnknownMark(id.to_string()))?;
        Ok(self.remove_seq(seq))
    }

    pub(crate) fn remove_seq(&mut self, seq: u64) -> Mark {
        let slot = self.slots.remove(&seq).expect("index and slots agree");
        self.index.remove(slot.mark.id().as_str());
        self.dirty.borrow_mut().remove(&seq);
        self.transitioning.remove(&seq);
        slot.mark.remove_listener(slot.listener);
        slot.mark
    }

    pub fn get_mark(&self, id: &str) -> Option<&Mark> {
        self.index.get(id).map(|seq| &self.slots[seq].mark)
    }

    /// Forces a mark to be visited on the next advance, e.g. after an
    /// external dependency of one of its computed attributes changed.
    pub fn invalidate(&mut self, id: &str) -> Result<()> {
        let seq = *self.index.get(id).ok_or_else(|| Error::UnknownMark(id.to_string()))?;
        self.dirty.borrow_mut().insert(seq);
        Ok(())
    }

    pub fn invalidate_all(&mut self) {
        self.dirty.borrow_mut().extend(self.slots.keys().copied());
    }

    /// All marks in insertion order, regardless of stage.
    pub fn iter(&self) -> impl Iterator<Item = &Mark> + '_ {
        self.slots.values().map(|s| &s.mark)
    }

    pub fn filter(&self, mut pred: impl FnMut(&Mark) -> bool) -> Vec<Mark> {
        self.iter().filter(|m| pred(m)).cloned().collect()
    }

    pub fn map<T>(&self, f: impl FnMut(&Mark) -> T) -> Vec<T> {
        self.iter().map(f).collect()
    }

    /// Steps every tracked mark to `to` and then the staging machine.
    /// Returns whether anything drawable changed.
    pub fn advance(&mut self, to: Millis) -> Result<bool> {
        if to < self.last_time {
            return Err(Error::TimeRegression {
                from: self.last_time,
                to,
            });
        }
        self.last_time = to;
        let mut changed = false;
        match self.tracking {
            Tracking::Naive => {
                // the dirty set is left alone; it only ever over-approximates
                self.visits = self.slots.len();
                for slot in self.slots.values() {
                    changed |= slot.mark.advance_tracked(to)?.0;
                }
            }
            Tracking::Dirty => {
                let visit: Vec<u64> = self.dirty.borrow().iter().copied().collect();
                self.visits = visit.len();
                for seq in visit {
                    let Some(slot) = self.slots.get(&seq) else { continue };
                    let (c, animating) = slot.mark.advance_tracked(to)?;
                    changed |= c;
                    // a completion callback may have restarted an attribute
                    // already stepped this frame
                    if !animating && !slot.mark.is_animating() {
                        self.dirty.borrow_mut().remove(&seq);
                    }
                }
            }
        }
        changed |= self.step_stage();
        Ok(changed)
    }

    /// Starts the same animation on every mark holding `name`; marks
    /// without it are skipped. Returns a signal for the whole batch.
    pub fn animate_all(
        &mut self,
        name: &str,
        target: impl Into<AttributeValue<Value>>,
        spec: AnimationSpec<Value>,
        clock: &FrameClock,
    ) -> Result<CompletionSignal> {
        self.animate_all_staggered(name, target, spec, clock, |_, _| 0.0)
    }

    /// Like [`animate_all`](Self::animate_all), adding `delay(i, mark)` to
    /// the spec's delay, where `i` counts the marks animated so far.
    pub fn animate_all_staggered(
        &mut self,
        name: &str,
        target: impl Into<AttributeValue<Value>>,
        spec: AnimationSpec<Value>,
        clock: &FrameClock,
        delay: impl Fn(usize, &Mark) -> Millis,
    ) -> Result<CompletionSignal> {
        spec.validate()?;
        let target = target.into();
        let mut signals = Vec::new();
        for mark in self.slots.values().map(|s| &s.mark) {
            let Ok(attr) = mark.attribute(name) else { continue };
            let extra = delay(signals.len(), mark);
            let spec = spec.clone().with_delay(spec.delay + extra);
            signals.push(attr.animate(target.clone(), spec, clock)?);
        }
        Ok(CompletionSignal::all(signals))
    }
}
