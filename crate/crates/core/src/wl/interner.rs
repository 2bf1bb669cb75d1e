use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::tgraph::AttrValue;

/// Dense color identifier. Only meaningful inside the session that issued it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorId(pub u32);

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which learnable map a signature stands in for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Plain refinement on a single static graph.
    Static,
    /// Snapshot refinement seeded by the step's node attributes.
    Input,
    /// Snapshot refinement seeded by the previous hidden state.
    Recurrent,
    /// The recurrent cell combining two per-node colors.
    Cell,
    /// Refinement of the aggregated graph after sequence encoding.
    Aggregate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Namespace {
    pub role: Role,
    pub layer: u32,
}

impl Namespace {
    pub fn new(role: Role, layer: usize) -> Self {
        Namespace {
            role,
            layer: layer as u32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Signature {
    /// The all-zero initial state.
    Start,
    Symbol(AttrValue),
    Sequence(Vec<AttrValue>),
    /// One refinement step: own color and the sorted multiset of
    /// `(neighbor color, edge color)` pairs.
    Refine {
        ns: Namespace,
        own: ColorId,
        neighbors: Vec<(ColorId, ColorId)>,
    },
    Combine {
        ns: Namespace,
        left: ColorId,
        right: ColorId,
    },
}

static NEXT_SESSION: AtomicU64 = AtomicU64::new(1);

/// Injective map from signatures to dense colors, assigned in first-seen order.
#[derive(Debug)]
pub struct Interner {
    session: u64,
    ids: HashMap<Signature, ColorId>,
}

impl Interner {
    /// Opens a new session with a process-unique id.
    pub fn new() -> Self {
        Interner {
            session: NEXT_SESSION.fetch_add(1, Ordering::Relaxed),
            ids: HashMap::new(),
        }
    }

    pub fn session(&self) -> u64 {
        self.session
    }

    pub fn intern(&mut self, sig: Signature) -> ColorId {
        let next = ColorId(self.ids.len() as u32);
        *self.ids.entry(sig).or_insert(next)
    }

    pub fn symbol(&mut self, a: &AttrValue) -> ColorId {
        self.intern(Signature::Symbol(a.clone()))
    }

    pub fn sequence(&mut self, seq: &[AttrValue]) -> ColorId {
        self.intern(Signature::Sequence(seq.to_vec()))
    }

    pub fn start(&mut self) -> ColorId {
        self.intern(Signature::Start)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

impl Default for Interner {
    fn default() -> Self {
        Self::new()
    }
}
