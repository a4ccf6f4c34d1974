//! Interruptible entry and exit of marks.
//!
//! A staged group tracks a [`StageState`] per mark. The momentary stage
//! (what a draw loop should iterate) is every mark that is entering,
//! onstage, or exiting; the specified set drops the exiting ones.
//!
//! Transitions:
//!
//! ```text
//! Offstage --show--> Entering --enter done--> Onstage
//!                     ^    |                     |
//!                show |    | hide           hide |
//!                     |    v                     v
//!                    Exiting <-------------------+
//!                       |
//!                       +--exit done--> Offstage
//! ```

use std::collections::HashSet;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::mark::{Mark, MarkId};
use crate::render_group::MarkRenderGroup;
use crate::signal::{CompletionSignal, SignalState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StageState {
    Offstage,
    Entering,
    Onstage,
    Exiting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StageEvent {
    Show,
    Hide,
    EnterDone,
    ExitDone,
}

impl StageState {
    /// The state after `event`, or `None` when the event does not apply.
    pub fn on(self, event: StageEvent) -> Option<StageState> {
        use StageEvent::*;
        use StageState::*;
        match (self, event) {
            (Offstage, Show) | (Exiting, Show) => Some(Entering),
            (Entering, EnterDone) => Some(Onstage),
            (Entering, Hide) | (Onstage, Hide) => Some(Exiting),
            (Exiting, ExitDone) => Some(Offstage),
            _ => None,
        }
    }

    /// Drawable right now.
    pub fn is_momentary(self) -> bool {
        self != StageState::Offstage
    }

    /// Part of the state the caller asked for.
    pub fn is_specified(self) -> bool {
        matches!(self, StageState::Entering | StageState::Onstage)
    }
}

/// Whether `from -> to` is one of the six legal stage transitions.
pub fn is_legal_transition(from: StageState, to: StageState) -> bool {
    [
        StageEvent::Show,
        StageEvent::Hide,
        StageEvent::EnterDone,
        StageEvent::ExitDone,
    ]
    .into_iter()
    .any(|e| from.on(e) == Some(to))
}

type Prepare = Rc<dyn Fn(&Mark)>;
type Transition = Rc<dyn Fn(&Mark) -> CompletionSignal>;

/// Callbacks choreographing entry and exit. `enter` and `exit` start
/// whatever animations they like and return a signal that resolves when
/// those are done (or [`CompletionSignal::finished`]).
#[derive(Clone)]
pub struct StagingConfig {
    initialize: Option<Prepare>,
    enter: Transition,
    exit: Transition,
    remove_on_exit: bool,
}

impl StagingConfig {
    pub fn new(
        enter: impl Fn(&Mark) -> CompletionSignal + 'static,
        exit: impl Fn(&Mark) -> CompletionSignal + 'static,
    ) -> Self {
        Self {
            initialize: None,
            enter: Rc::new(enter),
            exit: Rc::new(exit),
            remove_on_exit: false,
        }
    }

    /// Prepares a mark entering from offstage (not one re-entering while
    /// it exits).
    pub fn with_initialize(mut self, f: impl Fn(&Mark) + 'static) -> Self {
        self.initialize = Some(Rc::new(f));
        self
    }

    /// Drop marks from the group once their exit completes.
    pub fn with_remove_on_exit(mut self, remove: bool) -> Self {
        self.remove_on_exit = remove;
        self
    }
}

/// Outcome of [`MarkRenderGroup::set_visible_set`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VisibleSetChange {
    pub shown: Vec<MarkId>,
    pub hidden: Vec<MarkId>,
}

impl VisibleSetChange {
    pub fn is_empty(&self) -> bool {
        self.shown.is_empty() && self.hidden.is_empty()
    }
}

impl MarkRenderGroup {
    /// Enables staging. Marks already in the group count as onstage; marks
    /// added later start offstage.
    pub fn configure_staging(&mut self, config: StagingConfig) {
        self.staging = Some(config);
    }

    pub fn is_staged(&self) -> bool {
        self.staging.is_some()
    }

    pub fn stage_state(&self, id: &str) -> Option<StageState> {
        self.index.get(id).map(|seq| self.slots[seq].stage)
    }

    /// The momentary stage: marks to draw this frame, in insertion order.
    /// Every mark when staging is off.
    pub fn stage(&self) -> impl Iterator<Item = &Mark> + '_ {
        self.slots.values().filter(|s| s.stage.is_momentary()).map(|s| &s.mark)
    }

    /// Marks that are entering or onstage.
    pub fn specified_marks(&self) -> impl Iterator<Item = &Mark> + '_ {
        self.slots.values().filter(|s| s.stage.is_specified()).map(|s| &s.mark)
    }

    pub fn stage_len(&self) -> usize {
        self.slots.values().filter(|s| s.stage.is_momentary()).count()
    }

    fn config(&self) -> Result<StagingConfig> {
        self.staging.clone().ok_or(Error::StagingNotConfigured)
    }

    /// Brings a mark onstage. A mark that is exiting turns around from its
    /// current values; entering or onstage marks are left alone.
    pub fn show(&mut self, id: &str) -> Result<()> {
        let config = self.config()?;
        let seq = *self.index.get(id).ok_or_else(|| Error::UnknownMark(id.to_string()))?;
        self.show_seq(seq, &config);
        Ok(())
    }

    /// Adds `mark` if its id is new, then shows the mark stored under that id.
    pub fn show_mark(&mut self, mark: Mark) -> Result<()> {
        let config = self.config()?;
        if !self.contains(mark.id().as_str()) {
            self.add_mark(mark.clone())?;
        }
        let seq = self.index[mark.id().as_str()];
        self.show_seq(seq, &config);
        Ok(())
    }

    /// Takes a mark offstage. An entering mark turns around from its current
    /// values; exiting or offstage marks are left alone.
    pub fn hide(&mut self, id: &str) -> Result<()> {
        let config = self.config()?;
        let seq = *self.index.get(id).ok_or_else(|| Error::UnknownMark(id.to_string()))?;
        self.hide_seq(seq, &config);
        Ok(())
    }

    fn show_seq(&mut self, seq: u64, config: &StagingConfig) {
        let slot = self.slots.get_mut(&seq).expect("seq from index");
        let fresh = match slot.stage {
            StageState::Offstage => true,
            StageState::Exiting => false,
            StageState::Entering | StageState::Onstage => return,
        };
        if let Some(old) = slot.signal.take() {
            old.interrupt();
        }
        let mark = slot.mark.clone();
        if fresh {
            if let Some(init) = &config.initialize {
                init(&mark);
            }
        }
        let signal = (config.enter)(&mark);
        let slot = self.slots.get_mut(&seq).expect("callbacks cannot remove marks");
        slot.stage = StageState::Entering;
        slot.signal = Some(signal);
        self.transitioning.insert(seq);
    }

    fn hide_seq(&mut self, seq: u64, config: &StagingConfig) {
        let slot = self.slots.get_mut(&seq).expect("seq from index");
        if !slot.stage.is_specified() {
            return;
        }
        if let Some(old) = slot.signal.take() {
            old.interrupt();
        }
        let mark = slot.mark.clone();
        let signal = (config.exit)(&mark);
        let slot = self.slots.get_mut(&seq).expect("callbacks cannot remove marks");
        slot.stage = StageState::Exiting;
        slot.signal = Some(signal);
        self.transitioning.insert(seq);
    }

    /// Declarative reconciliation: after this call exactly the marks in
    /// `ids` are specified-visible. Unknown ids are built with `factory`;
    /// if any id cannot be resolved nothing changes.
    pub fn set_visible_set<I, S>(
        &mut self,
        ids: I,
        mut factory: impl FnMut(&str) -> Option<Mark>,
    ) -> Result<VisibleSetChange>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let config = self.config()?;
        let mut wanted: Vec<String> = Vec::new();
        let mut wanted_set: HashSet<String> = HashSet::new();
        for id in ids {
            let id = id.as_ref();
            if wanted_set.insert(id.to_string()) {
                wanted.push(id.to_string());
            }
        }
        let mut created = Vec::new();
        for id in wanted.iter().filter(|id| !self.contains(id)) {
            match factory(id) {
                Some(mark) if mark.id().as_str() == id => created.push(mark),
                _ => return Err(Error::UnresolvableMark(id.clone())),
            }
        }
        for mark in created {
            self.add_mark(mark)?;
        }

        let mut change = VisibleSetChange::default();
        let to_hide: Vec<u64> = self
            .slots
            .iter()
            .filter(|(_, s)| s.stage.is_specified() && !wanted_set.contains(s.mark.id().as_str()))
            .map(|(seq, _)| *seq)
            .collect();
        for seq in to_hide {
            change.hidden.push(self.slots[&seq].mark.id().clone());
            self.hide_seq(seq, &config);
        }
        for id in &wanted {
            let seq = self.index[id.as_str()];
            if !self.slots[&seq].stage.is_specified() {
                change.shown.push(self.slots[&seq].mark.id().clone());
                self.show_seq(seq, &config);
            }
        }
        Ok(change)
    }

    /// Applies resolved enter/exit signals, in insertion order. Returns
    /// whether any mark changed stage.
    ///
    /// The group replaces (and interrupts) a mark's signal whenever it turns
    /// the mark around, so the signal held here is always the current one.
    /// If something else interrupts it, the transition is treated as done
    /// so the mark cannot get stuck mid-transition.
    pub(crate) fn step_stage(&mut self) -> bool {
        if self.transitioning.is_empty() {
            return false;
        }
        let mut changed = false;
        let mut removals = Vec::new();
        let ready: Vec<u64> = self
            .transitioning
            .iter()
            .copied()
            .filter(|seq| {
                self.slots[seq]
                    .signal
                    .as_ref()
                    .is_none_or(|s| s.state() != SignalState::Pending)
            })
            .collect();
        for seq in ready {
            let slot = self.slots.get_mut(&seq).expect("transitioning marks are present");
            let event = match slot.stage {
                StageState::Entering => StageEvent::EnterDone,
                StageState::Exiting => StageEvent::ExitDone,
                _ => unreachable!("only entering/exiting marks wait on signals"),
            };
            slot.stage = slot.stage.on(event).expect("legal completion");
            slot.signal = None;
            self.transitioning.remove(&seq);
            changed = true;
            if slot.stage == StageState::Offstage && self.staging.as_ref().is_some_and(|c| c.remove_on_exit) {
                removals.push(seq);
            }
        }
        for seq in removals {
            self.remove_seq(seq);
        }
        changed
    }
}
