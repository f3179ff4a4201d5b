//! Serializable report documents. Field order is declaration order, so the
//! JSON output is deterministic.

use serde::{Deserialize, Serialize};
use unrep_core::ClassificationReport;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unreps: Option<UnrepSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heap: Option<HeapSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centralizer: Option<CentralizerSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pseudounits: Option<PseudounitSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clifford: Option<CliffordSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    /// Wall-clock time; only filled in human-readable mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str, input: InputEcho) -> Self {
        Report {
            command: command.to_string(),
            input,
            classification: None,
            unreps: None,
            heap: None,
            centralizer: None,
            pseudounits: None,
            clifford: None,
            verdicts: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn all_verdicts_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    /// `"generators"` or `"table"`.
    pub kind: String,
    pub degree: usize,
    /// Canonically ordered elements as image lists.
    pub elements: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faithful: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnrepSection {
    /// `|S| = |X|`, the necessary condition for existence.
    pub precheck: bool,
    pub route: String,
    pub count: usize,
    /// `maps[k][x]` is the element index of `φ_k(x)`.
    pub maps: Vec<Vec<usize>>,
    pub induced: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeapSection {
    pub size: usize,
    pub axioms: bool,
    pub identity: usize,
    pub group_table: Vec<Vec<usize>>,
    pub abelian: bool,
    pub cyclic: bool,
    /// Sorted element orders.
    pub order_profile: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerSection {
    pub size: usize,
    pub elements: Vec<Vec<usize>>,
    pub invertible: Vec<Vec<usize>>,
    pub invertible_group_table: Vec<Vec<usize>>,
    /// Heap index → invertible-centralizer index, when unrepresentations exist.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heap_isomorphism: Option<Vec<usize>>,
    /// Invertible-centralizer index → heap index under `f ↦ e ∘ f`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit_map: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudounitSection {
    pub count: usize,
    pub alphas: Vec<Vec<usize>>,
    pub group_table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_count: Option<usize>,
    /// `k(α) = α(1)` for each pseudounit, monoids only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duality_images: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectingMapDto {
    pub from: usize,
    pub to: usize,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDto {
    pub idempotent: usize,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCSweep {
    /// Every bijection when `n ≤ 7`, otherwise seeded samples.
    pub exhaustive: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub bijections_checked: usize,
    pub action_homs: usize,
    pub disagreements: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceDto {
    /// Unrepresentations obtained by evaluation at a point.
    pub evaluation_count: usize,
    /// `(e, F(e) has an underrepresentation)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<(usize, bool)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordSection {
    pub idempotents: Vec<usize>,
    pub order_pairs: Vec<(usize, usize)>,
    pub components: Vec<ComponentDto>,
    pub connecting: Vec<ConnectingMapDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem_c: Option<TheoremCSweep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub existence: Option<ExistenceDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Verdict {
    pub fn new(name: &str, holds: bool, detail: impl Into<String>) -> Self {
        Verdict {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

impl From<&unrep_core::Error> for ErrorDoc {
    fn from(e: &unrep_core::Error) -> Self {
        ErrorDoc {
            error: ErrorBody {
                code: e.code().to_string(),
                message: e.to_string(),
            },
        }
    }
}
