use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fc::{
    compose_cells, compose_with_identities, describe_cell, describe_frame, id_cell, FcOracle,
    Frame, HorId, LawReport, ObjectId, Path, TwoCell, VertId,
};

pub mod laws {
    pub const MONAD_ASSOC: &str = "monad-assoc";
    pub const MONAD_LEFT_UNIT: &str = "monad-left-unit";
    pub const MONAD_RIGHT_UNIT: &str = "monad-right-unit";
    pub const MAP_MULT: &str = "monad-map-mult";
    pub const MAP_UNIT: &str = "monad-map-unit";
    pub const ACT_SRC_ASSOC: &str = "bimodule-src-assoc";
    pub const ACT_TGT_ASSOC: &str = "bimodule-tgt-assoc";
    pub const ACT_COMMUTE: &str = "bimodule-commute";
    pub const ACT_SRC_UNIT: &str = "bimodule-src-unit";
    pub const ACT_TGT_UNIT: &str = "bimodule-tgt-unit";
    pub const CELL_INNER: &str = "bim-cell-inner";
    pub const CELL_OUTER_LEFT: &str = "bim-cell-outer-left";
    pub const CELL_OUTER_RIGHT: &str = "bim-cell-outer-right";
    pub const CELL_NULLARY: &str = "bim-cell-nullary";
}

/// A horizontal endo-1-cell `t: x -> x` with multiplication `(t, t) => t`
/// and unit `() => t`, both with identity sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monad {
    pub carrier: ObjectId,
    pub endo: HorId,
    pub mult: TwoCell,
    pub unit: TwoCell,
}

/// A vertical 1-cell `f` with a 2-cell `φ: (t) => t'` whose sides are both
/// `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonadMap {
    pub vert: VertId,
    pub phi: TwoCell,
}

/// A horizontal 1-cell `m: x -> x'` acted on by `t` at `x` through
/// `ρ: (t, m) => m` and by `t'` at `x'` through `λ: (m, t') => m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bimodule {
    pub carrier: HorId,
    pub source: Monad,
    pub target: Monad,
    pub act_src: TwoCell,
    pub act_tgt: TwoCell,
}

/// Boundary of a Bim 2-cell: bimodules `m_1, ..., m_n` along the top (`anchor`
/// is the monad they start from, needed when `n = 0`), monad maps down the
/// sides and a bimodule along the bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimFrame {
    pub anchor: Monad,
    pub source: Vec<Bimodule>,
    pub left: MonadMap,
    pub right: MonadMap,
    pub target: Bimodule,
}

/// A 2-cell of the underlying fc-multicategory, to be checked against a
/// [`BimFrame`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BimTwoCell {
    pub underlying: TwoCell,
}

fn frame_error(
    v: &(impl FcOracle + ?Sized),
    what: &str,
    cell: &TwoCell,
    expected: &Frame,
) -> Error {
    Error::FrameError(format!(
        "{what} has frame {} but {} is required",
        describe_frame(v, &cell.frame),
        describe_frame(v, expected)
    ))
}

fn expect_frame(
    v: &(impl FcOracle + ?Sized),
    what: &str,
    cell: &TwoCell,
    expected: &Frame,
) -> Result<()> {
    if &cell.frame == expected {
        Ok(())
    } else {
        Err(frame_error(v, what, cell, expected))
    }
}

fn paste(v: &(impl FcOracle + ?Sized), theta: &TwoCell, children: &[TwoCell]) -> Result<TwoCell> {
    compose_with_identities(v, theta, children)
}

fn compare(
    v: &(impl FcOracle + ?Sized),
    report: &mut LawReport,
    law: &str,
    lhs: &TwoCell,
    rhs: &TwoCell,
    context: impl FnOnce() -> String,
) {
    report.expect(law, lhs == rhs, || {
        format!(
            "{}: {} differs from {}",
            context(),
            describe_cell(v, lhs),
            describe_cell(v, rhs)
        )
    });
}

fn monad_frames(v: &(impl FcOracle + ?Sized), m: &Monad) -> Result<()> {
    let (x, y) = v.hor_ends(m.endo)?;
    if x != m.carrier || y != m.carrier {
        return Err(Error::FrameError(format!(
            "{} is not an endo-1-cell on {}",
            v.hor_label(m.endo),
            v.object_label(m.carrier)
        )));
    }
    let one = v.id_vert(m.carrier)?;
    let mult = Frame::new(Path::new(m.carrier, vec![m.endo, m.endo]), one, one, m.endo);
    let unit = Frame::new(Path::empty(m.carrier), one, one, m.endo);
    expect_frame(v, "multiplication", &m.mult, &mult)?;
    expect_frame(v, "unit", &m.unit, &unit)
}

/// Associativity and both unit laws of a monad.
pub fn check_monad(v: &(impl FcOracle + ?Sized), m: &Monad) -> Result<LawReport> {
    let mut report = LawReport::new();
    monad_laws(v, m, &mut report, false)?;
    Ok(report)
}

/// Evaluates the monad laws, stopping at the first failure when `quick`.
pub(crate) fn monad_laws(
    v: &(impl FcOracle + ?Sized),
    m: &Monad,
    report: &mut LawReport,
    quick: bool,
) -> Result<()> {
    monad_frames(v, m)?;
    let one_t = id_cell(v, m.endo)?;
    let label = || v.hor_label(m.endo);
    let left = paste(v, &m.mult, &[m.unit.clone(), one_t.clone()])?;
    compare(v, report, laws::MONAD_LEFT_UNIT, &left, &one_t, || {
        format!("μ∘(η, 1) on {}", label())
    });
    if quick && !report.pass {
        return Ok(());
    }
    let right = paste(v, &m.mult, &[one_t.clone(), m.unit.clone()])?;
    compare(v, report, laws::MONAD_RIGHT_UNIT, &right, &one_t, || {
        format!("μ∘(1, η) on {}", label())
    });
    if quick && !report.pass {
        return Ok(());
    }
    let lhs = paste(v, &m.mult, &[m.mult.clone(), one_t.clone()])?;
    let rhs = paste(v, &m.mult, &[one_t, m.mult.clone()])?;
    compare(v, report, laws::MONAD_ASSOC, &lhs, &rhs, || {
        format!("μ∘(μ, 1) vs μ∘(1, μ) on {}", label())
    });
    Ok(())
}

fn map_frame(v: &(impl FcOracle + ?Sized), f: &MonadMap, src: &Monad, tgt: &Monad) -> Result<()> {
    let expected = Frame::new(
        Path::single(src.carrier, src.endo),
        f.vert,
        f.vert,
        tgt.endo,
    );
    expect_frame(v, "monad map", &f.phi, &expected)
}

/// Compatibility of `φ` with the multiplications and the units. The unit
/// condition compares `φ ∘ ⟨η⟩` with `η'` whiskered by `f`.
pub fn check_monad_map(
    v: &(impl FcOracle + ?Sized),
    f: &MonadMap,
    src: &Monad,
    tgt: &Monad,
) -> Result<LawReport> {
    let mut report = LawReport::new();
    monad_map_laws(v, f, src, tgt, &mut report, false)?;
    Ok(report)
}

pub(crate) fn monad_map_laws(
    v: &(impl FcOracle + ?Sized),
    f: &MonadMap,
    src: &Monad,
    tgt: &Monad,
    report: &mut LawReport,
    quick: bool,
) -> Result<()> {
    map_frame(v, f, src, tgt)?;
    let label = || v.vert_label(f.vert);
    let lhs = paste(v, &f.phi, &[src.unit.clone()])?;
    let rhs = compose_cells(v, &tgt.unit, &[], &[f.vert])?;
    compare(v, report, laws::MAP_UNIT, &lhs, &rhs, || {
        format!("φ∘⟨η⟩ vs η' whiskered by {}", label())
    });
    if quick && !report.pass {
        return Ok(());
    }
    let lhs = paste(v, &f.phi, &[src.mult.clone()])?;
    let rhs = compose_cells(
        v,
        &tgt.mult,
        &[f.phi.clone(), f.phi.clone()],
        &[f.vert, f.vert, f.vert],
    )?;
    compare(v, report, laws::MAP_MULT, &lhs, &rhs, || {
        format!("φ∘⟨μ⟩ vs μ'∘⟨φ, φ⟩ along {}", label())
    });
    Ok(())
}

pub(crate) fn act_src_frame(v: &(impl FcOracle + ?Sized), m: HorId, t: &Monad) -> Result<Frame> {
    let (_, y) = v.hor_ends(m)?;
    Ok(Frame::new(
        Path::new(t.carrier, vec![t.endo, m]),
        v.id_vert(t.carrier)?,
        v.id_vert(y)?,
        m,
    ))
}

pub(crate) fn act_tgt_frame(v: &(impl FcOracle + ?Sized), m: HorId, t: &Monad) -> Result<Frame> {
    let (x, _) = v.hor_ends(m)?;
    Ok(Frame::new(
        Path::new(x, vec![m, t.endo]),
        v.id_vert(x)?,
        v.id_vert(t.carrier)?,
        m,
    ))
}

fn bimodule_frames(v: &(impl FcOracle + ?Sized), b: &Bimodule) -> Result<()> {
    let (x, y) = v.hor_ends(b.carrier)?;
    if x != b.source.carrier || y != b.target.carrier {
        return Err(Error::FrameError(format!(
            "{} does not run between the carriers of its monads",
            v.hor_label(b.carrier)
        )));
    }
    expect_frame(
        v,
        "source action",
        &b.act_src,
        &act_src_frame(v, b.carrier, &b.source)?,
    )?;
    expect_frame(
        v,
        "target action",
        &b.act_tgt,
        &act_tgt_frame(v, b.carrier, &b.target)?,
    )
}

/// Associativity and unit laws of each action, and their commutation.
pub fn check_bimodule(v: &(impl FcOracle + ?Sized), b: &Bimodule) -> Result<LawReport> {
    let mut report = LawReport::new();
    bimodule_frames(v, b)?;
    src_action_laws(v, b.carrier, &b.source, &b.act_src, &mut report, false)?;
    tgt_action_laws(v, b.carrier, &b.target, &b.act_tgt, &mut report, false)?;
    commute_law(v, b, &mut report)?;
    Ok(report)
}

pub(crate) fn src_action_laws(
    v: &(impl FcOracle + ?Sized),
    m: HorId,
    t: &Monad,
    rho: &TwoCell,
    report: &mut LawReport,
    quick: bool,
) -> Result<()> {
    let one_m = id_cell(v, m)?;
    let one_t = id_cell(v, t.endo)?;
    let label = || v.hor_label(m);
    let unit = paste(v, rho, &[t.unit.clone(), one_m.clone()])?;
    compare(v, report, laws::ACT_SRC_UNIT, &unit, &one_m, || {
        format!("ρ∘(η, 1) on {}", label())
    });
    if quick && !report.pass {
        return Ok(());
    }
    let lhs = paste(v, rho, &[t.mult.clone(), one_m])?;
    let rhs = paste(v, rho, &[one_t, rho.clone()])?;
    compare(v, report, laws::ACT_SRC_ASSOC, &lhs, &rhs, || {
        format!("ρ∘(μ, 1) vs ρ∘(1, ρ) on {}", label())
    });
    Ok(())
}

pub(crate) fn tgt_action_laws(
    v: &(impl FcOracle + ?Sized),
    m: HorId,
    t: &Monad,
    lambda: &TwoCell,
    report: &mut LawReport,
    quick: bool,
) -> Result<()> {
    let one_m = id_cell(v, m)?;
    let one_t = id_cell(v, t.endo)?;
    let label = || v.hor_label(m);
    let unit = paste(v, lambda, &[one_m.clone(), t.unit.clone()])?;
    compare(v, report, laws::ACT_TGT_UNIT, &unit, &one_m, || {
        format!("λ∘(1, η) on {}", label())
    });
    if quick && !report.pass {
        return Ok(());
    }
    let lhs = paste(v, lambda, &[one_m, t.mult.clone()])?;
    let rhs = paste(v, lambda, &[lambda.clone(), one_t])?;
    compare(v, report, laws::ACT_TGT_ASSOC, &lhs, &rhs, || {
        format!("λ∘(1, μ) vs λ∘(λ, 1) on {}", label())
    });
    Ok(())
}

pub(crate) fn commute_law(
    v: &(impl FcOracle + ?Sized),
    b: &Bimodule,
    report: &mut LawReport,
) -> Result<()> {
    let lhs = paste(
        v,
        &b.act_tgt,
        &[b.act_src.clone(), id_cell(v, b.target.endo)?],
    )?;
    let rhs = paste(
        v,
        &b.act_src,
        &[id_cell(v, b.source.endo)?, b.act_tgt.clone()],
    )?;
    compare(v, report, laws::ACT_COMMUTE, &lhs, &rhs, || {
        format!("λ∘(ρ, 1) vs ρ∘(1, λ) on {}", v.hor_label(b.carrier))
    });
    Ok(())
}

/// The underlying frame a Bim 2-cell must have, after checking that the
/// pieces of `frame` fit together.
pub fn underlying_frame(v: &(impl FcOracle + ?Sized), frame: &BimFrame) -> Result<Frame> {
    let mut at = &frame.anchor;
    for (i, b) in frame.source.iter().enumerate() {
        if &b.source != at {
            return Err(Error::FrameError(format!(
                "bimodule {} of the source does not start at the previous monad",
                i + 1
            )));
        }
        at = &b.target;
    }
    if frame.left.phi.frame.source.cells() != [frame.anchor.endo]
        || frame.left.phi.frame.target != frame.target.source.endo
    {
        return Err(Error::FrameError(
            "left monad map does not run from the first to the target's source monad".into(),
        ));
    }
    if frame.right.phi.frame.source.cells() != [at.endo]
        || frame.right.phi.frame.target != frame.target.target.endo
    {
        return Err(Error::FrameError(
            "right monad map does not run from the last to the target's target monad".into(),
        ));
    }
    if v.vert_ends(frame.left.vert)? != (frame.anchor.carrier, frame.target.source.carrier)
        || v.vert_ends(frame.right.vert)? != (at.carrier, frame.target.target.carrier)
    {
        return Err(Error::FrameError(
            "a side monad map does not run between the monad carriers".into(),
        ));
    }
    let path = Path::new(
        frame.anchor.carrier,
        frame.source.iter().map(|b| b.carrier).collect(),
    );
    Ok(Frame::new(
        path,
        frame.left.vert,
        frame.right.vert,
        frame.target.carrier,
    ))
}

/// Equivariance of a 2-cell: inner conditions between consecutive source
/// bimodules and outer conditions against the target's actions through the
/// side monad maps. A nullary cell satisfies the single condition
/// `ρ_m ∘ ⟨φ, θ⟩ = λ_m ∘ ⟨θ, φ'⟩`.
pub fn check_bim_cell(
    v: &(impl FcOracle + ?Sized),
    c: &BimTwoCell,
    frame: &BimFrame,
) -> Result<LawReport> {
    let mut report = LawReport::new();
    bim_cell_laws(v, &c.underlying, frame, &mut report, false)?;
    Ok(report)
}

pub(crate) fn bim_cell_laws(
    v: &(impl FcOracle + ?Sized),
    theta: &TwoCell,
    frame: &BimFrame,
    report: &mut LawReport,
    quick: bool,
) -> Result<()> {
    let expected = underlying_frame(v, frame)?;
    expect_frame(v, "Bim cell", theta, &expected)?;
    let n = frame.source.len();
    let (f, f1) = (frame.left.vert, frame.right.vert);
    let tgt = &frame.target;
    if n == 0 {
        let lhs = compose_cells(
            v,
            &tgt.act_src,
            &[frame.left.phi.clone(), theta.clone()],
            &[f, f, f1],
        )?;
        let rhs = compose_cells(
            v,
            &tgt.act_tgt,
            &[theta.clone(), frame.right.phi.clone()],
            &[f, f1, f1],
        )?;
        compare(v, report, laws::CELL_NULLARY, &lhs, &rhs, || {
            "ρ∘(φ, θ) vs λ∘(θ, φ')".into()
        });
        return Ok(());
    }
    let ids = frame
        .source
        .iter()
        .map(|b| id_cell(v, b.carrier))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..n - 1 {
        let mut left = ids.clone();
        left[i] = frame.source[i].act_tgt.clone();
        let mut right = ids.clone();
        right[i + 1] = frame.source[i + 1].act_src.clone();
        let lhs = paste(v, theta, &left)?;
        let rhs = paste(v, theta, &right)?;
        compare(v, report, laws::CELL_INNER, &lhs, &rhs, || {
            format!("action moved across slot {}", i + 1)
        });
        if quick && !report.pass {
            return Ok(());
        }
    }
    let mut children = ids.clone();
    children[0] = frame.source[0].act_src.clone();
    let lhs = compose_cells(
        v,
        &tgt.act_src,
        &[frame.left.phi.clone(), theta.clone()],
        &[f, f, f1],
    )?;
    let rhs = paste(v, theta, &children)?;
    compare(v, report, laws::CELL_OUTER_LEFT, &lhs, &rhs, || {
        "ρ∘(φ, θ) vs θ∘(ρ, 1, ...)".into()
    });
    if quick && !report.pass {
        return Ok(());
    }
    let mut children = ids;
    children[n - 1] = frame.source[n - 1].act_tgt.clone();
    let lhs = compose_cells(
        v,
        &tgt.act_tgt,
        &[theta.clone(), frame.right.phi.clone()],
        &[f, f1, f1],
    )?;
    let rhs = paste(v, theta, &children)?;
    compare(v, report, laws::CELL_OUTER_RIGHT, &lhs, &rhs, || {
        "λ∘(θ, φ') vs θ∘(..., 1, λ)".into()
    });
    Ok(())
}
