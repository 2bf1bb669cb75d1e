use crate::tgraph::{AttrValue, TemporalGraph};

/// Node indices of [`gen_foodweb`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(usize)]
pub enum FoodWebNode {
    Lynx = 0,
    Hare = 1,
    Plant = 2,
    Orca = 3,
    Penguin = 4,
    Fish = 5,
}

impl FoodWebNode {
    pub const fn index(self) -> usize {
        self as usize
    }
}

pub const FOODWEB_NAMES: [&str; 6] = ["Lynx", "Hare", "Plant", "Orca", "Penguin", "Fish"];

/// Two disconnected three-species chains with identical dynamics.
///
/// Step 1 has the predator edges `Lynx→Hare` and `Orca→Penguin`; step 2 keeps
/// them and adds `Hare→Plant` and `Penguin→Fish`. Node attributes are uniform.
pub fn gen_foodweb() -> TemporalGraph {
    use FoodWebNode::*;
    let mut tg = TemporalGraph::new(6, 2, true);
    let both = vec![AttrValue::unit(), AttrValue::unit()];
    let late = vec![AttrValue::Null, AttrValue::unit()];
    for (u, v, seq) in [
        (Lynx, Hare, &both),
        (Orca, Penguin, &both),
        (Hare, Plant, &late),
        (Penguin, Fish, &late),
    ] {
        tg.set_edge_seq(u.index(), v.index(), seq.clone())
            .expect("static food web is well formed");
    }
    tg
}
