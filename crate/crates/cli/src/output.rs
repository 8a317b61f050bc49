//! Output documents: one serializable struct per command, rendered as
//! pretty JSON, plain text, or LaTeX. Field order is fixed and every map is
//! ordered, so identical invocations produce byte-identical output.

use serde::Serialize;
use shifted_parking::{Color, Nspf, Partition, Rational};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One expansion term: partition as a decreasing integer array, coefficient
/// as an exact rational string (`"num/den"`, denominator omitted when 1).
#[derive(Serialize)]
pub struct TermDoc {
    pub partition: Vec<u32>,
    pub coeff: String,
}

pub fn term_doc(partition: &Partition, coeff: &Rational) -> TermDoc {
    TermDoc {
        partition: partition.parts().to_vec(),
        coeff: coeff.to_string(),
    }
}

#[derive(Serialize)]
pub struct ExpandDoc {
    pub command: String,
    pub version: String,
    pub n: u32,
    pub basis: String,
    pub terms: Vec<TermDoc>,
}

#[derive(Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct SuiteDoc {
    pub suite: String,
    pub bound: u32,
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub command: String,
    pub version: String,
    pub passed: bool,
    pub suites: Vec<SuiteDoc>,
}

#[derive(Serialize)]
pub struct EntryDoc {
    pub value: u32,
    pub color: String,
}

pub fn entry_doc(value: u32, color: Color) -> EntryDoc {
    EntryDoc {
        value,
        color: match color {
            Color::Blue => "blue".to_string(),
            Color::Red => "red".to_string(),
        },
    }
}

pub fn member_doc(m: &Nspf) -> Vec<EntryDoc> {
    m.entries().iter().map(|&(v, c)| entry_doc(v, c)).collect()
}

#[derive(Serialize)]
pub struct BlockDoc {
    pub multiplicities: Vec<u32>,
    pub first_colors: Vec<EntryDoc>,
    pub label: Vec<u32>,
    pub size: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Vec<EntryDoc>>>,
}

#[derive(Serialize)]
pub struct LabelRowDoc {
    pub label: Vec<u32>,
    pub blocks: u64,
    pub block_size: String,
}

#[derive(Serialize)]
pub struct NspfDoc {
    pub command: String,
    pub version: String,
    pub n: u32,
    pub total: String,
    pub per_label: Vec<LabelRowDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockDoc>>,
}

#[derive(Serialize)]
pub struct SchroederDoc {
    pub command: String,
    pub version: String,
    pub n: u32,
    pub value: String,
}

/// Serializes any document as pretty JSON with a trailing newline.
pub fn print_json<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("documents contain only serializable fields")
    );
}
