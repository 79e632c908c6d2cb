//! The structure file format: a JSON object with `format_version`, `kind`
//! and a kind-specific `body`. Bodies refer to sets, objects, morphisms and
//! cells by their index in the lists they come from.

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::enrich::Subset;
use crate::error::{Error, Result};
use crate::fc::CellId;
use crate::instances::{DoubleTables, FinSet, MonoidalTables, MulticatTables, SpanUniverse};

pub const FORMAT_VERSION: u32 = 1;

/// A category structure on an endo-span, as tables over apex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadTables {
    pub span: String,
    /// apex element serving as the identity of each carrier element
    pub identities: Vec<u32>,
    /// `(g, f, g ∘ f)` for every composable pair
    pub compose: Vec<(u32, u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadFile {
    pub universe: SpanUniverse,
    pub monad: MonadTables,
}

/// A profunctor on a span between two monads: `act_src` lists
/// `(u, e, e·u)`, `act_tgt` lists `(e, v, v·e)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleFile {
    pub universe: SpanUniverse,
    pub source: MonadTables,
    pub target: MonadTables,
    pub span: String,
    pub act_src: Vec<(u32, u32, u32)>,
    pub act_tgt: Vec<(u32, u32, u32)>,
}

/// The monoidal category an enriched file lives over: a presentation by
/// tables, or finite sets under cartesian product with the listed
/// cardinalities exposed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonoidalBase {
    Presentation(MonoidalTables),
    FinsetProduct { exposed: Vec<u32> },
}

/// An enriched category over a monoidal category: `homs[a * n + b]` is an
/// object, `comp[(a * n + b) * n + c]` and `ids[a]` are morphisms. Over a
/// presentation a morphism is `[index]`; over finite sets it is its value
/// table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnrichedFile {
    pub base: MonoidalBase,
    pub objects: Vec<String>,
    pub homs: Vec<u32>,
    pub comp: Vec<CellId>,
    pub ids: Vec<CellId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsetFamilyFile {
    pub set: FinSet,
    pub subsets: Vec<Subset>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "body", rename_all = "kebab-case")]
pub enum Structure {
    SpanUniverse(SpanUniverse),
    Monoidal(MonoidalTables),
    Multicat(MulticatTables),
    Double(DoubleTables),
    Monad(MonadFile),
    Bimodule(BimoduleFile),
    Enriched(EnrichedFile),
    SubsetFamily(SubsetFamilyFile),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::SpanUniverse(_) => "span-universe",
            Structure::Monoidal(_) => "monoidal",
            Structure::Multicat(_) => "multicat",
            Structure::Double(_) => "double",
            Structure::Monad(_) => "monad",
            Structure::Bimodule(_) => "bimodule",
            Structure::Enriched(_) => "enriched",
            Structure::SubsetFamily(_) => "subset-family",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope<'a> {
    format_version: u32,
    kind: Kind,
    #[serde(borrow)]
    body: &'a RawValue,
}

#[derive(Serialize)]
struct EnvelopeOut<'a> {
    format_version: u32,
    #[serde(flatten)]
    structure: &'a Structure,
}

#[derive(Clone, Copy, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Kind {
    SpanUniverse,
    Monoidal,
    Multicat,
    Double,
    Monad,
    Bimodule,
    Enriched,
    SubsetFamily,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_location(&e),
    }
}

fn strip_location(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_owned(),
        None => s,
    }
}

/// Parses a structure file. Syntax and schema errors carry the line and
/// column in `text`.
pub fn parse(text: &str) -> Result<Structure> {
    let env: Envelope = serde_json::from_str(text).map_err(parse_error)?;
    let body = env.body.get();
    let offset = body.as_ptr() as usize - text.as_ptr() as usize;
    let line = 1 + text[..offset].matches('\n').count();
    let column = offset - text[..offset].rfind('\n').map_or(0, |i| i + 1) + 1;
    if env.format_version != FORMAT_VERSION {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!(
                "format_version {} is not supported (expected {FORMAT_VERSION})",
                env.format_version
            ),
        });
    }
    let located = |e: serde_json::Error| {
        let (l, c) = if e.line() <= 1 {
            (line, column + e.column().saturating_sub(1))
        } else {
            (line + e.line() - 1, e.column())
        };
        Error::Parse {
            line: l,
            column: c,
            message: strip_location(&e),
        }
    };
    Ok(match env.kind {
        Kind::SpanUniverse => Structure::SpanUniverse(serde_json::from_str(body).map_err(located)?),
        Kind::Monoidal => Structure::Monoidal(serde_json::from_str(body).map_err(located)?),
        Kind::Multicat => Structure::Multicat(serde_json::from_str(body).map_err(located)?),
        Kind::Double => Structure::Double(serde_json::from_str(body).map_err(located)?),
        Kind::Monad => Structure::Monad(serde_json::from_str(body).map_err(located)?),
        Kind::Bimodule => Structure::Bimodule(serde_json::from_str(body).map_err(located)?),
        Kind::Enriched => Structure::Enriched(serde_json::from_str(body).map_err(located)?),
        Kind::SubsetFamily => Structure::SubsetFamily(serde_json::from_str(body).map_err(located)?),
    })
}

/// Pretty-printed file text, ending in a newline.
pub fn to_string(s: &Structure) -> String {
    let mut out = serde_json::to_string_pretty(&EnvelopeOut {
        format_version: FORMAT_VERSION,
        structure: s,
    })
    .expect("structures serialize");
    out.push('\n');
    out
}

pub fn read(path: &std::path::Path) -> Result<Structure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}
