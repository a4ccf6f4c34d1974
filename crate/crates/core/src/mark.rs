//! Marks: identified, insertion-ordered collections of attributes.

use std::any::Any;
use std::borrow::Borrow;
use std::cell::{Cell, RefCell};
use std::fmt;
use std::rc::{Rc, Weak};

use crate::attribute::{AnimationSpec, Attribute, AttributeValue};
use crate::clock::{FrameClock, Millis};
use crate::error::{Error, Result};
use crate::signal::CompletionSignal;
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkId(Rc<str>);

impl MarkId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for MarkId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl From<&str> for MarkId {
    fn from(s: &str) -> Self {
        MarkId(Rc::from(s))
    }
}

impl From<String> for MarkId {
    fn from(s: String) -> Self {
        MarkId(Rc::from(s))
    }
}

impl fmt::Display for MarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ListenerId(u64);

impl ListenerId {
    pub(crate) fn from_raw(raw: u64) -> Self {
        ListenerId(raw)
    }
}

type Listener = Rc<dyn Fn(&str)>;

#[derive(Default)]
struct Listeners {
    next: Cell<u64>,
    list: RefCell<Vec<(ListenerId, Listener)>>,
}

impl Listeners {
    fn notify(&self, attr: &str) {
        // snapshot so a listener may (de)register others
        let list: Vec<Listener> = self.list.borrow().iter().map(|(_, f)| f.clone()).collect();
        for f in list {
            f(attr);
        }
    }
}

struct Inner {
    id: MarkId,
    represented: Option<Rc<dyn Any>>,
    attrs: RefCell<Vec<(Rc<str>, Attribute<Value>)>>,
    listeners: Rc<Listeners>,
    time: Cell<Millis>,
}

/// Cheap, shared handle to a mark.
///
/// Listeners registered with [`Mark::on_change`] fire once per mutation
/// (`set` or an animation start on any attribute, including through an
/// attribute handle), never per animation frame.
///
/// Computed attributes may read sibling attributes through handles or a
/// [`WeakMark`]. Cycles between computed attributes are not detected.
#[derive(Clone)]
pub struct Mark(Rc<Inner>);

#[derive(Clone)]
pub struct WeakMark(Weak<Inner>);

impl WeakMark {
    pub fn upgrade(&self) -> Option<Mark> {
        self.0.upgrade().map(Mark)
    }
}

impl Mark {
    pub fn new<N, A>(id: impl Into<MarkId>, attributes: impl IntoIterator<Item = (N, A)>) -> Result<Mark>
    where
        N: AsRef<str>,
        A: Into<AttributeValue<Value>>,
    {
        let mut builder = MarkBuilder::new(id);
        for (name, value) in attributes {
            builder = builder.value(name.as_ref(), value.into());
        }
        builder.build()
    }

    pub fn builder(id: impl Into<MarkId>) -> MarkBuilder {
        MarkBuilder::new(id)
    }

    pub fn id(&self) -> &MarkId {
        &self.0.id
    }

    pub fn represented<T: Any>(&self) -> Option<&T> {
        self.0.represented.as_deref()?.downcast_ref()
    }

    pub fn downgrade(&self) -> WeakMark {
        WeakMark(Rc::downgrade(&self.0))
    }

    pub fn ptr_eq(&self, other: &Mark) -> bool {
        Rc::ptr_eq(&self.0, &other.0)
    }

    pub fn len(&self) -> usize {
        self.0.attrs.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn attribute_names(&self) -> Vec<String> {
        self.0.attrs.borrow().iter().map(|(n, _)| n.to_string()).collect()
    }

    pub fn has_attribute(&self, name: &str) -> bool {
        self.0.attrs.borrow().iter().any(|(n, _)| &**n == name)
    }

    /// Handle to the named attribute.
    pub fn attribute(&self, name: &str) -> Result<Attribute<Value>> {
        self.0
            .attrs
            .borrow()
            .iter()
            .find(|(n, _)| &**n == name)
            .map(|(_, a)| a.clone())
            .ok_or_else(|| Error::UnknownAttribute(name.to_string()))
    }

    /// Adds an attribute after construction. Counts as a mutation.
    pub fn insert_attribute(&self, name: &str, value: impl Into<AttributeValue<Value>>) -> Result<Attribute<Value>> {
        let attr = Attribute::new(value.into());
        self.attach(name, attr.clone())?;
        self.0.listeners.notify(name);
        Ok(attr)
    }

    fn attach(&self, name: &str, attr: Attribute<Value>) -> Result<()> {
        if self.has_attribute(name) {
            return Err(Error::DuplicateAttribute(name.to_string()));
        }
        let key: Rc<str> = Rc::from(name);
        let listeners = self.0.listeners.clone();
        let hook_key = key.clone();
        attr.set_observer(Some(Rc::new(move || listeners.notify(&hook_key))));
        self.0.attrs.borrow_mut().push((key, attr));
        Ok(())
    }

    /// Momentary value of the named attribute.
    pub fn attr(&self, name: &str) -> Result<Value> {
        Ok(self.attribute(name)?.get())
    }

    pub fn attr_at(&self, name: &str, t: Millis) -> Result<Value> {
        Ok(self.attribute(name)?.get_at(t))
    }

    pub fn attr_specified(&self, name: &str) -> Result<Value> {
        Ok(self.attribute(name)?.get_specified())
    }

    /// Momentary value of a numeric attribute.
    pub fn number(&self, name: &str) -> Result<f64> {
        let attrs = self.0.attrs.borrow();
        let (_, attr) = attrs
            .iter()
            .find(|(n, _)| &**n == name)
            .ok_or_else(|| Error::UnknownAttribute(name.to_string()))?;
        attr.get()
            .as_number()
            .ok_or_else(|| Error::NotNumeric(name.to_string()))
    }

    pub fn number_specified(&self, name: &str) -> Result<f64> {
        self.attr_specified(name)?
            .as_number()
            .ok_or_else(|| Error::NotNumeric(name.to_string()))
    }

    pub fn set(&self, name: &str, value: impl Into<AttributeValue<Value>>) -> Result<()> {
        self.attribute(name)?.set(value);
        Ok(())
    }

    pub fn animate_to(
        &self,
        name: &str,
        target: impl Into<Value>,
        spec: AnimationSpec<Value>,
        clock: &FrameClock,
    ) -> Result<CompletionSignal> {
        self.attribute(name)?.animate_to(target.into(), spec, clock)
    }

    pub fn animate(
        &self,
        name: &str,
        target: impl Into<AttributeValue<Value>>,
        spec: AnimationSpec<Value>,
        clock: &FrameClock,
    ) -> Result<CompletionSignal> {
        self.attribute(name)?.animate(target, spec, clock)
    }

    /// Advances every attribute (no short-circuit) and reports whether any
    /// of them changed.
    pub fn advance(&self, to: Millis) -> Result<bool> {
        self.advance_tracked(to).map(|(changed, _)| changed)
    }

    /// Advance that also reports whether any attribute is still animating.
    pub(crate) fn advance_tracked(&self, to: Millis) -> Result<(bool, bool)> {
        let from = self.0.time.get();
        if to < from {
            return Err(Error::TimeRegression { from, to });
        }
        self.0.time.set(to);
        let attrs = self.0.attrs.borrow();
        let (mut changed, mut animating) = (false, false);
        for (_, attr) in attrs.iter() {
            let (c, a) = attr.advance_tracked(to)?;
            changed |= c;
            animating |= a;
        }
        Ok((changed, animating))
    }

    pub fn time(&self) -> Millis {
        self.0.time.get()
    }

    /// Any attribute has an installed animation.
    pub fn is_animating(&self) -> bool {
        self.0.attrs.borrow().iter().any(|(_, a)| a.is_animating())
    }

    /// Registers a mutation listener. It receives the attribute name.
    pub fn on_change(&self, listener: impl Fn(&str) + 'static) -> ListenerId {
        let listeners = &self.0.listeners;
        let id = ListenerId(listeners.next.get());
        listeners.next.set(id.0 + 1);
        listeners.list.borrow_mut().push((id, Rc::new(listener)));
        id
    }

    pub fn remove_listener(&self, id: ListenerId) -> bool {
        let mut list = self.0.listeners.list.borrow_mut();
        let before = list.len();
        list.retain(|(l, _)| *l != id);
        list.len() != before
    }
}

impl fmt::Debug for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Mark")
            .field("id", &self.0.id)
            .field("attributes", &self.attribute_names())
            .finish()
    }
}

pub struct MarkBuilder {
    id: MarkId,
    represented: Option<Rc<dyn Any>>,
    attrs: Vec<(String, Attribute<Value>)>,
}

impl MarkBuilder {
    pub fn new(id: impl Into<MarkId>) -> Self {
        Self {
            id: id.into(),
            represented: None,
            attrs: Vec::new(),
        }
    }

    pub fn attr(self, name: &str, value: impl Into<Value>) -> Self {
        self.value(name, AttributeValue::Static(value.into()))
    }

    pub fn computed(self, name: &str, f: impl Fn() -> Value + 'static) -> Self {
        self.value(name, AttributeValue::computed(f))
    }

    pub fn value(self, name: &str, value: AttributeValue<Value>) -> Self {
        self.attribute(name, Attribute::new(value))
    }

    /// Uses an existing attribute handle, e.g. one flagged preloadable.
    pub fn attribute(mut self, name: &str, attr: Attribute<Value>) -> Self {
        self.attrs.push((name.to_string(), attr));
        self
    }

    pub fn represented<T: Any>(mut self, datum: T) -> Self {
        self.represented = Some(Rc::new(datum));
        self
    }

    pub fn build(self) -> Result<Mark> {
        let mark = Mark(Rc::new(Inner {
            id: self.id,
            represented: self.represented,
            attrs: RefCell::new(Vec::with_capacity(self.attrs.len())),
            listeners: Rc::new(Listeners::default()),
            time: Cell::new(0.0),
        }));
        for (name, attr) in self.attrs {
            mark.attach(&name, attr)?;
        }
        Ok(mark)
    }
}
