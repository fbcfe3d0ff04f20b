//! Ready-made instances: interval algebras over small Boolean algebras plus
//! a few table-imported algebras that exercise the negative paths.

use crate::cubic::{CubicAlgebra, Origin};
use crate::error::Result;
use crate::interval::IntervalAlgebra;
use crate::lattice::{BooleanAlgebra, Elem};

/// `I(B_n)`: the interval algebra over the powerset algebra on `n` atoms.
pub fn interval_over(n: u32) -> Result<IntervalAlgebra> {
    let base = BooleanAlgebra::powerset(n)?.as_implication_lattice();
    IntervalAlgebra::build(format!("I(B{n})"), base)
}

/// The cubic algebra of `I(B_n)`.
pub fn interval_cubic(n: u32) -> Result<CubicAlgebra> {
    Ok(interval_over(n)?.cubic().as_ref().clone())
}

/// The one-element cubic algebra.
pub fn one_element() -> CubicAlgebra {
    CubicAlgebra::from_delta_entries("{1}", 0, vec![vec![0]], &[(0, 0, 0)], Origin::Imported)
        .expect("one-element tables")
}

/// Four pairwise-incomparable vertices under a common top, with delta at the
/// top pairing them off. Passes the cubic axioms but not the MR axiom: the
/// vertices have no meets, yet their delta-joins do not drop below the top.
pub fn crown() -> CubicAlgebra {
    let n = 5;
    let one = 4;
    let mut join = vec![vec![one; n]; n];
    for x in 0..n {
        join[x][x] = x;
    }
    let entries: Vec<(Elem, Elem, Elem)> = vec![
        (0, 0, 0),
        (1, 1, 1),
        (2, 2, 2),
        (3, 3, 3),
        (one, one, one),
        (one, 0, 2),
        (one, 2, 0),
        (one, 1, 3),
        (one, 3, 1),
    ];
    CubicAlgebra::from_delta_entries("crown", one, join, &entries, Origin::Imported)
        .expect("crown tables")
}

/// The 3-chain with identity-only delta; fails the cubic axioms and gives
/// the MR checker a concrete witness.
pub fn chain3_identity_delta() -> CubicAlgebra {
    let n = 3;
    let mut join = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            join[x][y] = x.max(y);
        }
    }
    let mut entries = Vec::new();
    for y in 0..n {
        for x in 0..=y {
            entries.push((y, x, x));
        }
    }
    CubicAlgebra::from_delta_entries("chain3", n - 1, join, &entries, Origin::Imported)
        .expect("chain tables")
}

/// `I(B_n)` with element ids reversed and re-imported from raw tables; an
/// isomorphic copy that exercises the import path rather than the interval
/// constructor.
pub fn permuted_interval(n: u32) -> Result<CubicAlgebra> {
    let l = interval_cubic(n)?;
    let k = l.size();
    let p = |x: Elem| k - 1 - x;
    let mut join = vec![vec![0; k]; k];
    let mut entries = Vec::new();
    for x in 0..k {
        for y in 0..k {
            join[p(x)][p(y)] = p(l.join(x, y));
            if let Some(d) = l.delta_raw(y, x) {
                entries.push((p(y), p(x), p(d)));
            }
        }
    }
    CubicAlgebra::from_delta_entries(
        format!("I(B{n})-permuted"),
        p(l.one()),
        join,
        &entries,
        Origin::Imported,
    )
}
