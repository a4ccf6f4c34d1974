//! User and environment preferences exposed as reactive attributes.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;

use crate::attribute::{AnimationSpec, Attribute};
use crate::clock::Millis;
use crate::error::{Error, Result};
use crate::mark::ListenerId;
use crate::value::Value;

pub const PREFERS_REDUCED_MOTION: &str = "prefers_reduced_motion";
pub const PREFERS_INCREASED_CONTRAST: &str = "prefers_increased_contrast";

type SettingListener = Rc<dyn Fn(&str, &Value)>;

/// Settings are fed in by the embedding layer; nothing here queries the OS.
///
/// Every [`set_setting`](Self::set_setting) call notifies listeners, even if
/// the value is unchanged, so embedders can force re-evaluation.
pub struct RenderContext {
    settings: HashMap<String, Attribute<Value>>,
    listeners: RefCell<Vec<(ListenerId, SettingListener)>>,
    next_listener: Cell<u64>,
}

impl Default for RenderContext {
    fn default() -> Self {
        let mut ctx = Self {
            settings: HashMap::new(),
            listeners: RefCell::new(Vec::new()),
            next_listener: Cell::new(0),
        };
        ctx.register(PREFERS_REDUCED_MOTION, false);
        ctx.register(PREFERS_INCREASED_CONTRAST, false);
        ctx
    }
}

impl RenderContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a setting. Re-registering an existing name keeps its attribute
    /// and sets the new default.
    pub fn register(&mut self, name: &str, default: impl Into<Value>) {
        let value = default.into();
        match self.settings.get(name) {
            Some(attr) => attr.set(value),
            None => {
                self.settings.insert(name.to_string(), Attribute::new(value));
            }
        }
    }

    pub fn get_setting(&self, name: &str) -> Result<Value> {
        Ok(self.setting_attribute(name)?.get())
    }

    /// The attribute backing a setting, for use inside computed values.
    pub fn setting_attribute(&self, name: &str) -> Result<&Attribute<Value>> {
        self.settings
            .get(name)
            .ok_or_else(|| Error::UnknownSetting(name.to_string()))
    }

    pub fn set_setting(&self, name: &str, value: impl Into<Value>) -> Result<()> {
        let value = value.into();
        self.setting_attribute(name)?.set(value.clone());
        let listeners: Vec<SettingListener> = self.listeners.borrow().iter().map(|(_, f)| f.clone()).collect();
        for f in listeners {
            f(name, &value);
        }
        Ok(())
    }

    pub fn prefers_reduced_motion(&self) -> bool {
        self.get_setting(PREFERS_REDUCED_MOTION)
            .ok()
            .and_then(|v| v.as_bool())
            .unwrap_or(false)
    }

    pub fn prefers_increased_contrast(&self) -> bool {
        self.get_setting(PREFERS_INCREASED_CONTRAST)
            .ok()
            .and_then(|v| v.as_bool())
            .unwrap_or(false)
    }

    pub fn on_change(&self, listener: impl Fn(&str, &Value) + 'static) -> ListenerId {
        let id = ListenerId::from_raw(self.next_listener.get());
        self.next_listener.set(self.next_listener.get() + 1);
        self.listeners.borrow_mut().push((id, Rc::new(listener)));
        id
    }

    pub fn remove_listener(&self, id: ListenerId) -> bool {
        let mut list = self.listeners.borrow_mut();
        let before = list.len();
        list.retain(|(l, _)| *l != id);
        list.len() != before
    }

    /// True if any setting was set since the previous advance.
    pub fn advance(&self, to: Millis) -> Result<bool> {
        let mut changed = false;
        for attr in self.settings.values() {
            changed |= attr.advance(to)?;
        }
        Ok(changed)
    }

    /// Collapses positional-motion animations to zero duration when reduced
    /// motion is on. Only `duration` is ever touched.
    pub fn effective_spec<V>(&self, spec: AnimationSpec<V>, motion: bool) -> AnimationSpec<V> {
        if motion && self.prefers_reduced_motion() {
            AnimationSpec { duration: 0.0, ..spec }
        } else {
            spec
        }
    }
}
