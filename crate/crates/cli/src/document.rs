//! Input documents. Every struct rejects unknown fields.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Gb,
    Member,
    Radical,
    Fiber,
    Section,
    CocycleCheck,
    CechToForcing,
    Coboundary,
    Localize,
    Jacobian,
    Classify,
    Locus,
    Frobenius,
    Degree,
    Derivation,
    Corpus,
}

impl Task {
    pub fn as_str(self) -> &'static str {
        match self {
            Task::Gb => "gb",
            Task::Member => "member",
            Task::Radical => "radical",
            Task::Fiber => "fiber",
            Task::Section => "section",
            Task::CocycleCheck => "cocycle-check",
            Task::CechToForcing => "cech-to-forcing",
            Task::Coboundary => "coboundary",
            Task::Localize => "localize",
            Task::Jacobian => "jacobian",
            Task::Classify => "classify",
            Task::Locus => "locus",
            Task::Frobenius => "frobenius",
            Task::Degree => "degree",
            Task::Derivation => "derivation",
            Task::Corpus => "corpus",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDocument {
    pub task: Task,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub section: Option<String>,
    pub ring: RingBlock,
    #[serde(default)]
    pub input: Value,
    /// Values the report's `result` must contain; used by the corpus runner.
    #[serde(default)]
    pub expect: Option<BTreeMap<String, Value>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingBlock {
    pub variables: Vec<String>,
    #[serde(default)]
    pub characteristic: u64,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub order: Option<String>,
}

/// A field element: an integer or a constant expression such as `"-1/2"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GbInput {
    pub generators: Vec<String>,
    #[serde(default)]
    pub eliminate: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberInput {
    pub element: String,
    pub ideal: Vec<String>,
}

/// Forcing data: either `generators` and `element` (the ideal case
/// `f_1 T_1 + ... + f_n T_n + f = 0`) or `matrix` and `vector` (`A T = s`).
#[derive(Clone, Debug, Default)]
pub struct ForcingInput {
    pub generators: Option<Vec<String>>,
    pub element: Option<String>,
    pub matrix: Option<Vec<Vec<String>>>,
    pub vector: Option<Vec<String>>,
}

macro_rules! with_forcing {
    ($(#[$m:meta])* $name:ident { $($(#[$fm:meta])* $field:ident : $ty:ty),* $(,)? }) => {
        $(#[$m])*
        #[derive(Clone, Debug, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name {
            #[serde(default)]
            pub generators: Option<Vec<String>>,
            #[serde(default)]
            pub element: Option<String>,
            #[serde(default)]
            pub matrix: Option<Vec<Vec<String>>>,
            #[serde(default)]
            pub vector: Option<Vec<String>>,
            $($(#[$fm])* pub $field: $ty,)*
        }

        impl $name {
            pub fn forcing(&self) -> ForcingInput {
                ForcingInput {
                    generators: self.generators.clone(),
                    element: self.element.clone(),
                    matrix: self.matrix.clone(),
                    vector: self.vector.clone(),
                }
            }
        }
    };
}

with_forcing!(FiberInput { point: Vec<Scalar> });
with_forcing!(SectionInput {});
with_forcing!(JacobianInput {});
with_forcing!(ClassifyInput {
    #[serde(default)] point: Option<Vec<Scalar>>,
    #[serde(default)] points: Option<Vec<Vec<Scalar>>>,
    #[serde(default)] base_point: Option<Vec<Scalar>>,
    #[serde(default)] dim_base: Option<usize>,
    #[serde(default)] dim_algebra: Option<usize>,
});
with_forcing!(LocusInput {
    #[serde(default)] codim: Option<usize>,
    #[serde(default)] points: Vec<Vec<Scalar>>,
});
with_forcing!(DerivationInput {
    #[serde(default)] nilpotency: Vec<String>,
    #[serde(default)] kernel: Vec<String>,
});

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleInput {
    pub generators: Vec<String>,
    #[serde(default = "one")]
    pub m: u32,
    /// Keyed by `"i,j"` with `1 <= i < j <= n`; missing pairs are 0.
    pub numerators: BTreeMap<String, String>,
    /// Extra relations: the class is restricted to `R / (restrict)` first.
    #[serde(default)]
    pub restrict: Vec<String>,
    /// 1-based generator index, for `localize`.
    #[serde(default)]
    pub index: Option<usize>,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrobeniusInput {
    pub element: String,
    pub ideal: Vec<String>,
    #[serde(default)]
    pub emax: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeInput {
    /// One degree vector per ring variable, or one integer per variable.
    pub weights: Value,
    #[serde(default)]
    pub element: Option<String>,
    #[serde(default)]
    pub f1: Option<String>,
    #[serde(default)]
    pub f2: Option<String>,
    #[serde(default)]
    pub polynomials: Vec<String>,
}
