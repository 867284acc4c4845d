//! Building class members: named families, gluing recipes, a seeded random
//! generator, good P3 tests and ear sequences.

pub mod ears;
pub mod families;
pub mod generator;
pub mod glue;
pub mod goodp3;
pub mod text;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use ears::{add_good_ear, ear_sequence, replay, EarSequence, EarStep};
pub use generator::{random_member, random_member_with, GeneratorConfig, Generated, SeamKind};
pub use glue::{glue, GluingRecipe};
pub use goodp3::{good_p3_conditions, goodp3_gadget, is_good_p3, GoodP3Strategy};

/// The three subclasses that generation can be restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subclass {
    EvenWheelFree,
    EvenHoleFree,
    Bipartite,
}

impl Subclass {
    pub const ALL: [Subclass; 3] = [Subclass::EvenWheelFree, Subclass::EvenHoleFree, Subclass::Bipartite];

    pub fn name(self) -> &'static str {
        match self {
            Subclass::EvenWheelFree => "even-wheel-free",
            Subclass::EvenHoleFree => "even-hole-free",
            Subclass::Bipartite => "bipartite",
        }
    }
}

impl fmt::Display for Subclass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Subclass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "even-wheel-free" | "ewf" => Ok(Subclass::EvenWheelFree),
            "even-hole-free" | "ehf" => Ok(Subclass::EvenHoleFree),
            "bipartite" => Ok(Subclass::Bipartite),
            _ => Err(format!("unknown subclass '{s}' (expected even-wheel-free, even-hole-free or bipartite)")),
        }
    }
}
