//! Completion signals: the synchronous analogue of an animation promise.
//!
//! A signal starts `Pending` and resolves exactly once, to `Finished` or
//! `Interrupted`. Animation signals resolve inside `advance` (or, for
//! interruption, inside the call that replaced the animation), never
//! asynchronously.

use std::cell::{Cell, RefCell};
use std::fmt;
use std::rc::{Rc, Weak};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignalState {
    Pending,
    Finished,
    Interrupted,
}

impl SignalState {
    pub fn is_resolved(self) -> bool {
        self != SignalState::Pending
    }
}

type Callback = Box<dyn FnOnce(SignalState)>;

struct Node {
    state: Cell<SignalState>,
    callbacks: RefCell<Vec<Callback>>,
    children: Vec<CompletionSignal>,
}

#[derive(Clone)]
pub struct CompletionSignal(Rc<Node>);

impl CompletionSignal {
    pub fn pending() -> Self {
        Self(Rc::new(Node {
            state: Cell::new(SignalState::Pending),
            callbacks: RefCell::new(Vec::new()),
            children: Vec::new(),
        }))
    }

    /// An already-finished signal, for enter/exit callbacks with nothing to wait on.
    pub fn finished() -> Self {
        let s = Self::pending();
        s.0.state.set(SignalState::Finished);
        s
    }

    /// Finishes when every child finishes; interrupted as soon as any child
    /// is. An empty set is finished immediately.
    pub fn all(signals: impl IntoIterator<Item = CompletionSignal>) -> Self {
        let children: Vec<_> = signals.into_iter().collect();
        let all = Self(Rc::new(Node {
            state: Cell::new(SignalState::Pending),
            callbacks: RefCell::new(Vec::new()),
            children,
        }));
        if all.0.children.is_empty() {
            all.0.state.set(SignalState::Finished);
            return all;
        }
        for child in &all.0.children {
            let weak: Weak<Node> = Rc::downgrade(&all.0);
            child.on_resolve(move |state| {
                let Some(node) = weak.upgrade() else { return };
                let parent = CompletionSignal(node);
                match state {
                    SignalState::Interrupted => {
                        parent.resolve(SignalState::Interrupted);
                    }
                    _ => {
                        if parent.0.children.iter().all(|c| c.state() == SignalState::Finished) {
                            parent.resolve(SignalState::Finished);
                        }
                    }
                }
            });
        }
        all
    }

    pub fn state(&self) -> SignalState {
        self.0.state.get()
    }

    pub fn is_resolved(&self) -> bool {
        self.state().is_resolved()
    }

    /// Runs `f` once on resolution, or immediately if already resolved.
    pub fn on_resolve(&self, f: impl FnOnce(SignalState) + 'static) {
        match self.state() {
            SignalState::Pending => self.0.callbacks.borrow_mut().push(Box::new(f)),
            state => f(state),
        }
    }

    /// Resolves as interrupted, along with any pending children. No effect
    /// once resolved.
    pub fn interrupt(&self) {
        for child in &self.0.children {
            child.interrupt();
        }
        self.resolve(SignalState::Interrupted);
    }

    /// Returns false if the signal was already resolved.
    pub(crate) fn resolve(&self, state: SignalState) -> bool {
        debug_assert!(state.is_resolved());
        if self.is_resolved() {
            return false;
        }
        self.0.state.set(state);
        let callbacks = std::mem::take(&mut *self.0.callbacks.borrow_mut());
        for cb in callbacks {
            cb(state);
        }
        true
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Rc::ptr_eq(&self.0, &other.0)
    }
}

impl fmt::Debug for CompletionSignal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("CompletionSignal").field(&self.state()).finish()
    }
}
