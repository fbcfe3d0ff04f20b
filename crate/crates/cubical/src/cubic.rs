//! Finite cubic algebras: a join semilattice with top and a partial binary
//! operation `delta(y, x)` defined exactly on comparable pairs `x <= y`,
//! together with the axiom checkers, the MR-axiom checker, and the derived
//! relations and face maps.
//!
//! The order is always derived from the join table, never stored separately.

use std::collections::HashMap;
use std::sync::Arc;

use serde_json::json;

use crate::error::{Error, Result};
use crate::lattice::Elem;
use crate::report::{LawReport, ReportBuilder};
use crate::scan::{collect_failures, CheckConfig};

/// Above this carrier size the meet table is computed on demand instead of
/// being materialized up front.
const MEET_TABLE_CAP: usize = 256;

/// How the algebra was obtained; informational only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    /// Built as an interval algebra over an implication lattice.
    Interval,
    /// Imported from raw tables (files, tests, hand construction).
    Imported,
    /// Derived from another structure (subalgebra, filter lattice).
    Derived,
}

#[derive(Debug, Clone)]
pub struct CubicAlgebra {
    name: String,
    size: usize,
    one: Elem,
    join: Vec<Vec<Elem>>,
    /// `delta[y][x]`, populated exactly for `x <= y` in a well-formed table.
    delta: Vec<Vec<Option<Elem>>>,
    origin: Origin,
    // derived
    leq: Vec<Vec<bool>>,
    meet: Option<Vec<Vec<Option<Elem>>>>,
}

impl PartialEq for CubicAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.one == other.one
            && self.join == other.join
            && self.delta == other.delta
    }
}
impl Eq for CubicAlgebra {}

impl CubicAlgebra {
    /// Build from explicit tables. Only shape and id ranges are validated
    /// here; semantic validation is [`check_cubic_axioms`], which mutation
    /// tests rely on being able to reach with a broken table.
    pub fn from_tables(
        name: impl Into<String>,
        one: Elem,
        join: Vec<Vec<Elem>>,
        delta: Vec<Vec<Option<Elem>>>,
        origin: Origin,
    ) -> Result<Self> {
        let size = join.len();
        if size == 0 {
            return Err(Error::Structure("empty carrier".into()));
        }
        if delta.len() != size || one >= size {
            return Err(Error::Structure("table sizes disagree".into()));
        }
        for row in &join {
            if row.len() != size || row.iter().any(|&v| v >= size) {
                return Err(Error::Structure("ragged or out-of-range join table".into()));
            }
        }
        for row in &delta {
            if row.len() != size || row.iter().any(|&v| matches!(v, Some(x) if x >= size)) {
                return Err(Error::Structure("ragged or out-of-range delta table".into()));
            }
        }
        let leq: Vec<Vec<bool>> = (0..size)
            .map(|x| (0..size).map(|y| join[x][y] == y).collect())
            .collect();
        let mut alg = CubicAlgebra {
            name: name.into(),
            size,
            one,
            join,
            delta,
            origin,
            leq,
            meet: None,
        };
        if size <= MEET_TABLE_CAP {
            let table = (0..size)
                .map(|a| (0..size).map(|b| alg.meet_scan(a, b)).collect())
                .collect();
            alg.meet = Some(table);
        }
        Ok(alg)
    }

    /// Convenience constructor from sparse delta entries `(y, x, value)`.
    pub fn from_delta_entries(
        name: impl Into<String>,
        one: Elem,
        join: Vec<Vec<Elem>>,
        entries: &[(Elem, Elem, Elem)],
        origin: Origin,
    ) -> Result<Self> {
        let size = join.len();
        let mut delta = vec![vec![None; size]; size];
        for &(y, x, v) in entries {
            if y >= size || x >= size || v >= size {
                return Err(Error::Structure(format!(
                    "delta entry out of range: ({y},{x},{v})"
                )));
            }
            delta[y][x] = Some(v);
        }
        CubicAlgebra::from_tables(name, one, join, delta, origin)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x][y]
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq[x][y]
    }

    /// Raw table access: `None` when the pair is outside the stored domain.
    pub fn delta_raw(&self, y: Elem, x: Elem) -> Option<Elem> {
        self.delta[y][x]
    }

    /// `delta(y, x)` for `x <= y`; querying an incomparable pair is a
    /// contract error, not a silent absent.
    pub fn delta(&self, y: Elem, x: Elem) -> Result<Elem> {
        self.delta[y][x].ok_or_else(|| {
            Error::Contract(format!("delta({y},{x}) undefined: {x} is not below {y}"))
        })
    }

    /// `delta(1, x)`, total on any well-formed algebra.
    pub fn delta1(&self, x: Elem) -> Elem {
        self.delta[self.one][x].expect("delta(1, x) defined for all x")
    }

    fn meet_scan(&self, a: Elem, b: Elem) -> Option<Elem> {
        // common lower bounds are closed under join, so fold them up and
        // check the result is itself a common lower bound
        let mut m: Option<Elem> = None;
        for z in 0..self.size {
            if self.leq[z][a] && self.leq[z][b] {
                m = Some(match m {
                    None => z,
                    Some(acc) => self.join[acc][z],
                });
            }
        }
        m.filter(|&m| self.leq[m][a] && self.leq[m][b])
    }

    /// Greatest lower bound in the join-induced order, if it exists.
    pub fn meet_if_exists(&self, a: Elem, b: Elem) -> Option<Elem> {
        match &self.meet {
            Some(table) => table[a][b],
            None => self.meet_scan(a, b),
        }
    }

    /// The derived total operation `xy = delta(1, delta(x v y, y)) v y`;
    /// `None` if a needed delta entry is missing (broken table).
    pub fn xy_opt(&self, x: Elem, y: Elem) -> Option<Elem> {
        let j = self.join[x][y];
        let inner = self.delta[j][y]?;
        let flipped = self.delta[self.one][inner]?;
        Some(self.join[flipped][y])
    }

    /// `xy` on a verified algebra.
    pub fn xy(&self, x: Elem, y: Elem) -> Elem {
        self.xy_opt(x, y).expect("xy defined on well-formed algebra")
    }

    /// `a` is below `b` up to delta-symmetry: `delta(a v b, a) <= b`.
    pub fn preceq(&self, a: Elem, b: Elem) -> bool {
        let j = self.join[a][b];
        let d = self.delta[j][a].expect("delta on comparable pair");
        self.leq[d][b]
    }

    /// `delta(a v b, a) = b`.
    pub fn simeq(&self, a: Elem, b: Elem) -> bool {
        let j = self.join[a][b];
        self.delta[j][a] == Some(b)
    }

    /// Minimal elements (the vertices of an interval algebra).
    pub fn atoms(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&a| self.elements().all(|z| !self.lt(z, a)))
            .collect()
    }

    pub fn up_set(&self, x: Elem) -> Vec<Elem> {
        self.elements().filter(|&y| self.leq[x][y]).collect()
    }

    /// The face map `f_ab(x) = (x v b) ^ (delta(1, x) v b)` sending `[a, 1]`
    /// into `[b, 1]`; `a` and `b` must be atoms and `a <= x`.
    pub fn face_map(&self, a: Elem, b: Elem, x: Elem) -> Result<Elem> {
        let atoms = self.atoms();
        if !atoms.contains(&a) || !atoms.contains(&b) {
            return Err(Error::Contract(format!("face map endpoints {a},{b} must be atoms")));
        }
        if !self.leq[a][x] {
            return Err(Error::Contract(format!("face map domain error: {a} not below {x}")));
        }
        let s = self.join[x][b];
        let t = self.join[self.delta1(x)][b];
        self.meet_if_exists(s, t).ok_or_else(|| {
            Error::Contract(format!(
                "face map needs the meet of {s} and {t}; the algebra is not MR"
            ))
        })
    }

    /// All `(x, y)` with `x <= y`.
    pub fn comparable_pairs(&self) -> Vec<[Elem; 2]> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if self.leq[x][y] {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    fn chains3(&self) -> Vec<[Elem; 3]> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if !self.leq[x][y] {
                    continue;
                }
                for z in 0..self.size {
                    if self.leq[y][z] {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }
}

/// Exhaustive check of the cubic-algebra axioms, including the semilattice
/// laws for the join table. Delta entries on incomparable pairs (or missing
/// on comparable ones) are a structure error carrying a witness.
pub fn check_cubic_axioms(l: &CubicAlgebra, cfg: &CheckConfig) -> Result<LawReport> {
    let mut rb = ReportBuilder::new(l.name(), "cubic", cfg.seed);
    let n = l.size();
    let all: Vec<Elem> = l.elements().collect();

    let idem = collect_failures(cfg.mode, &all, |&x| {
        (l.join(x, x) != x).then(|| json!({"x": x}))
    });
    rb.law("join_idempotent", n as u64, None, idem);

    let pairs: Vec<[Elem; 2]> = {
        let mut v = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                v.push([x, y]);
            }
        }
        v
    };
    let comm = collect_failures(cfg.mode, &pairs, |&[x, y]| {
        (l.join(x, y) != l.join(y, x)).then(|| json!({"x": x, "y": y}))
    });
    rb.law("join_commutative", pairs.len() as u64, None, comm);

    let triples: Vec<[Elem; 3]> = {
        let mut v = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    v.push([x, y, z]);
                }
            }
        }
        v
    };
    let assoc = collect_failures(cfg.mode, &triples, |&[x, y, z]| {
        (l.join(l.join(x, y), z) != l.join(x, l.join(y, z)))
            .then(|| json!({"x": x, "y": y, "z": z}))
    });
    rb.law("join_associative", triples.len() as u64, None, assoc);

    let top = collect_failures(cfg.mode, &all, |&x| {
        (l.join(x, l.one()) != l.one()).then(|| json!({"x": x}))
    });
    rb.law("one_is_top", n as u64, None, top);

    // the join table must be sane before the delta domain can be trusted
    if !rb.all_passed_so_far() {
        return Ok(rb.finish());
    }

    for y in 0..n {
        for x in 0..n {
            let defined = l.delta_raw(y, x).is_some();
            if defined != l.leq(x, y) {
                return Err(Error::Structure(format!(
                    "delta({y},{x}) {} but {x} {} below {y}",
                    if defined { "defined" } else { "missing" },
                    if l.leq(x, y) { "is" } else { "is not" },
                )));
            }
        }
    }

    let comparable = l.comparable_pairs();
    let ax_a = collect_failures(cfg.mode, &comparable, |&[x, y]| {
        let d = l.delta_raw(y, x)?; // domain verified above
        (l.join(d, x) != y).then(|| json!({"axiom": "a", "x": x, "y": y}))
    });
    rb.law("axiom_a", comparable.len() as u64, None, ax_a);

    let ax_c = collect_failures(cfg.mode, &comparable, |&[x, y]| {
        let d = l.delta_raw(y, x).unwrap();
        match l.delta_raw(y, d) {
            Some(dd) if dd == x => None,
            got => Some(json!({"axiom": "c", "x": x, "y": y, "delta": d, "got": got})),
        }
    });
    rb.law("axiom_c", comparable.len() as u64, None, ax_c);

    let chains = l.chains3();
    let ax_b = collect_failures(cfg.mode, &chains, |&[x, y, z]| {
        let dyx = l.delta_raw(y, x).unwrap();
        let lhs = l.delta_raw(z, dyx);
        let dzy = l.delta_raw(z, y).unwrap();
        let dzx = l.delta_raw(z, x).unwrap();
        let rhs = l.delta_raw(dzy, dzx);
        if lhs.is_none() || lhs != rhs {
            Some(json!({"axiom": "b", "x": x, "y": y, "z": z}))
        } else {
            None
        }
    });
    rb.law("axiom_b", chains.len() as u64, None, ax_b);

    let ax_d = collect_failures(cfg.mode, &chains, |&[x, y, z]| {
        let dzx = l.delta_raw(z, x).unwrap();
        let dzy = l.delta_raw(z, y).unwrap();
        (!l.leq(dzx, dzy)).then(|| json!({"axiom": "d", "x": x, "y": y, "z": z}))
    });
    rb.law("axiom_d", chains.len() as u64, None, ax_d);

    let ax_e = collect_failures(cfg.mode, &pairs, |&[x, y]| {
        let v = l.xy_opt(x, y).and_then(|xy| l.xy_opt(xy, y));
        (v != Some(l.join(x, y))).then(|| json!({"axiom": "e", "x": x, "y": y}))
    });
    rb.law("axiom_e", pairs.len() as u64, None, ax_e);

    let ax_f = collect_failures(cfg.mode, &triples, |&[x, y, z]| {
        let lhs = l.xy_opt(y, z).and_then(|yz| l.xy_opt(x, yz));
        let rhs = l.xy_opt(x, z).and_then(|xz| l.xy_opt(y, xz));
        (lhs.is_none() || lhs != rhs).then(|| json!({"axiom": "f", "x": x, "y": y, "z": z}))
    });
    rb.law("axiom_f", triples.len() as u64, None, ax_f);

    Ok(rb.finish())
}

/// The MR axiom: for `a, b < x`, `delta(x, a) v b < x` iff the meet of `a`
/// and `b` does not exist.
pub fn check_mr_axiom(l: &CubicAlgebra, cfg: &CheckConfig) -> Result<LawReport> {
    let mut rb = ReportBuilder::new(l.name(), "mr", cfg.seed);
    let n = l.size();
    let mut dom = Vec::new();
    for x in 0..n {
        for a in 0..n {
            if !l.lt(a, x) {
                continue;
            }
            for b in 0..n {
                if l.lt(b, x) {
                    dom.push([x, a, b]);
                }
            }
        }
    }
    let viol = collect_failures(cfg.mode, &dom, |&[x, a, b]| {
        let d = l.delta_raw(x, a)?;
        let strict = l.lt(l.join(d, b), x);
        let no_meet = l.meet_if_exists(a, b).is_none();
        (strict != no_meet).then(|| json!({"x": x, "a": a, "b": b}))
    });
    rb.law("mr_axiom", dom.len() as u64, None, viol);
    Ok(rb.finish())
}

/// Plain boolean form of the MR check, used where only the verdict matters.
pub fn is_mr(l: &CubicAlgebra) -> bool {
    check_mr_axiom(l, &CheckConfig::default())
        .map(|r| r.passed())
        .unwrap_or(false)
}

/// The consequences of the basic axioms: comparability from meets, equality
/// from meets, and the MR characterization via common lower bounds.
pub fn check_prop_triv_suite(l: &CubicAlgebra, cfg: &CheckConfig) -> Result<LawReport> {
    let mut rb = ReportBuilder::new(l.name(), "cubic", cfg.seed);
    let n = l.size();
    let mut pairs = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            pairs.push([p, q]);
        }
    }

    let prop_le = collect_failures(cfg.mode, &pairs, |&[p, q]| {
        (l.preceq(p, q) && l.meet_if_exists(p, q).is_some() && !l.leq(p, q))
            .then(|| json!({"p": p, "q": q}))
    });
    rb.law("preceq_with_meet_implies_leq", pairs.len() as u64, None, prop_le);

    let cor_eq = collect_failures(cfg.mode, &pairs, |&[p, q]| {
        (l.simeq(p, q) && l.meet_if_exists(p, q).is_some() && p != q)
            .then(|| json!({"p": p, "q": q}))
    });
    rb.law("simeq_with_meet_implies_eq", pairs.len() as u64, None, cor_eq);

    let mr = is_mr(l);
    let common_lower = pairs.iter().all(|&[x, y]| {
        l.elements().any(|z| l.preceq(z, x) && l.preceq(z, y))
    });
    rb.claim(
        "mr_iff_common_preceq_lower_bound",
        mr == common_lower,
        json!({"mr": mr, "common_lower_bound": common_lower}),
    );
    Ok(rb.finish())
}

/// A map between cubic algebras, stored with owning handles so composite
/// structures can keep their homs alive.
#[derive(Debug, Clone)]
pub struct CubicHom {
    pub source: Arc<CubicAlgebra>,
    pub target: Arc<CubicAlgebra>,
    pub map: Vec<Elem>,
}

impl CubicHom {
    pub fn new(source: Arc<CubicAlgebra>, target: Arc<CubicAlgebra>, map: Vec<Elem>) -> Self {
        CubicHom { source, target, map }
    }

    pub fn identity(alg: Arc<CubicAlgebra>) -> Self {
        let map = alg.elements().collect();
        CubicHom {
            source: alg.clone(),
            target: alg,
            map,
        }
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn compose(&self, then: &CubicHom) -> Result<CubicHom> {
        if self.target.as_ref() != then.source.as_ref() {
            return Err(Error::Contract("hom composition endpoint mismatch".into()));
        }
        Ok(CubicHom {
            source: self.source.clone(),
            target: then.target.clone(),
            map: self.map.iter().map(|&x| then.map[x]).collect(),
        })
    }

    /// Preservation of one, join, and delta wherever defined.
    pub fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.map.len() != s.size() {
            return Err(Error::Contract("hom map has wrong length".into()));
        }
        if self.map.iter().any(|&v| v >= t.size()) {
            return Err(Error::Contract("hom map out of target range".into()));
        }
        if self.map[s.one()] != t.one() {
            return Err(Error::falsified("hom_one", "one not preserved"));
        }
        for x in s.elements() {
            for y in s.elements() {
                if self.map[s.join(x, y)] != t.join(self.map[x], self.map[y]) {
                    return Err(Error::falsified(
                        "hom_join",
                        format!("join not preserved at ({x},{y})"),
                    ));
                }
            }
        }
        for [x, y] in s.comparable_pairs() {
            let d = s.delta_raw(y, x).expect("well-formed source");
            let td = t.delta_raw(self.map[y], self.map[x]);
            if td != Some(self.map[d]) {
                return Err(Error::falsified(
                    "hom_delta",
                    format!("delta not preserved at ({y},{x})"),
                ));
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// An embedding is an injective hom.
    pub fn verify_embedding(&self) -> Result<()> {
        self.verify()?;
        if !self.is_injective() {
            return Err(Error::falsified("hom_injective", "map is not injective"));
        }
        Ok(())
    }
}

/// Full embedding: every non-top target element lies below the image of a
/// non-top source element. Contract error if `f` is not an embedding.
pub fn check_full_embedding(f: &CubicHom) -> Result<bool> {
    f.verify_embedding()
        .map_err(|e| Error::Contract(format!("not an embedding: {e}")))?;
    let (s, t) = (&f.source, &f.target);
    Ok(t.elements().filter(|&m| m != t.one()).all(|m| {
        s.elements()
            .any(|l| l != s.one() && t.leq(m, f.map[l]))
    }))
}

/// The subalgebra induced on a join- and delta-closed subset, with the id
/// translation maps in both directions.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub algebra: Arc<CubicAlgebra>,
    /// Sub id -> parent id (sorted ascending).
    pub to_parent: Vec<Elem>,
    /// Parent id -> sub id.
    pub from_parent: HashMap<Elem, Elem>,
}

pub fn induced_subalgebra(parent: &CubicAlgebra, subset: &[Elem]) -> Result<Subalgebra> {
    let mut to_parent: Vec<Elem> = subset.to_vec();
    to_parent.sort_unstable();
    to_parent.dedup();
    if !to_parent.contains(&parent.one()) {
        return Err(Error::Contract("subset does not contain one".into()));
    }
    let from_parent: HashMap<Elem, Elem> = to_parent
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let k = to_parent.len();
    let mut join = vec![vec![0; k]; k];
    let mut delta = vec![vec![None; k]; k];
    for i in 0..k {
        for j in 0..k {
            let pj = parent.join(to_parent[i], to_parent[j]);
            join[i][j] = *from_parent
                .get(&pj)
                .ok_or_else(|| Error::Contract(format!("subset not join-closed at {pj}")))?;
            if parent.leq(to_parent[j], to_parent[i]) {
                let d = parent.delta_raw(to_parent[i], to_parent[j]).unwrap();
                let sd = *from_parent
                    .get(&d)
                    .ok_or_else(|| Error::Contract(format!("subset not delta-closed at {d}")))?;
                delta[i][j] = Some(sd);
            }
        }
    }
    let algebra = CubicAlgebra::from_tables(
        format!("{}[sub:{}]", parent.name(), k),
        from_parent[&parent.one()],
        join,
        delta,
        Origin::Derived,
    )?;
    Ok(Subalgebra {
        algebra: Arc::new(algebra),
        to_parent,
        from_parent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::scan::CheckConfig;

    fn cfg() -> CheckConfig {
        CheckConfig::default()
    }

    #[test]
    fn one_element_algebra_passes_everything() {
        let l = instances::one_element();
        assert!(check_cubic_axioms(&l, &cfg()).unwrap().passed());
        assert!(check_mr_axiom(&l, &cfg()).unwrap().passed());
        assert!(check_prop_triv_suite(&l, &cfg()).unwrap().passed());
    }

    #[test]
    fn interval_b1_passes_and_mutation_fails_axiom_c() {
        let l = instances::interval_cubic(1).unwrap();
        assert!(check_cubic_axioms(&l, &cfg()).unwrap().passed());

        // patch delta(1, u) to u: delta(1, delta(1, u)) must return u
        let u = l.atoms()[0];
        let mut delta = l.delta.clone();
        delta[l.one()][u] = Some(u);
        let broken =
            CubicAlgebra::from_tables("mutant", l.one(), l.join.clone(), delta, Origin::Imported)
                .unwrap();
        let rep = check_cubic_axioms(&broken, &cfg()).unwrap();
        assert!(!rep.passed());
        let failed: Vec<&str> = rep.failures().map(|r| r.law.as_str()).collect();
        assert!(failed.contains(&"axiom_c"), "failed: {failed:?}");
        assert!(rep.failures().all(|r| r.witness.is_some()));
    }

    #[test]
    fn three_chain_with_identity_delta_fails() {
        let l = instances::chain3_identity_delta();
        // axiom (a) breaks: delta(1, 0) v 0 = 0 != 1
        let rep = check_cubic_axioms(&l, &cfg()).unwrap();
        assert!(!rep.passed());
        // and the MR witness search finds a counterexample
        let mr = check_mr_axiom(&l, &cfg()).unwrap();
        assert!(!mr.passed());
        assert!(mr.failures().next().unwrap().witness.is_some());
    }

    #[test]
    fn crown_is_cubic_but_not_mr() {
        let l = instances::crown();
        assert!(check_cubic_axioms(&l, &cfg()).unwrap().passed());
        assert!(!check_mr_axiom(&l, &cfg()).unwrap().passed());
        // the common-lower-bound equivalence still holds on it
        assert!(check_prop_triv_suite(&l, &cfg()).unwrap().passed());
    }

    #[test]
    fn preceq_and_simeq_on_interval_b1() {
        let l = instances::interval_cubic(1).unwrap();
        let atoms = l.atoms();
        let (u, w) = (atoms[0], atoms[1]);
        assert!(l.preceq(u, u));
        assert!(l.simeq(u, w)); // delta(1, u) = w by the swap rule
        for x in l.elements() {
            assert!(l.preceq(x, l.one()));
        }
    }

    #[test]
    fn meets_in_interval_b1() {
        let l = instances::interval_cubic(1).unwrap();
        let atoms = l.atoms();
        assert_eq!(l.meet_if_exists(atoms[0], atoms[1]), None);
        for x in l.elements() {
            assert_eq!(l.meet_if_exists(x, l.one()), Some(x));
        }
    }

    #[test]
    fn face_maps_compose_to_identity() {
        for n in 1..=2 {
            let l = instances::interval_cubic(n).unwrap();
            let atoms = l.atoms();
            for &a in &atoms {
                for &b in &atoms {
                    for x in l.up_set(a) {
                        let img = l.face_map(a, b, x).unwrap();
                        assert!(l.leq(b, img));
                        assert_eq!(l.face_map(b, a, img).unwrap(), x);
                    }
                    // identity face map
                    for x in l.up_set(a) {
                        assert_eq!(l.face_map(a, a, x).unwrap(), x);
                    }
                    // bijection [a,1] -> [b,1]
                    let mut imgs: Vec<Elem> = l
                        .up_set(a)
                        .iter()
                        .map(|&x| l.face_map(a, b, x).unwrap())
                        .collect();
                    imgs.sort_unstable();
                    imgs.dedup();
                    assert_eq!(imgs, l.up_set(b));
                }
            }
        }
    }

    #[test]
    fn face_map_on_b1_swaps_vertices() {
        let l = instances::interval_cubic(1).unwrap();
        let atoms = l.atoms();
        let (u, w) = (atoms[0], atoms[1]);
        // (u v w) ^ (delta(1,u) v w) = 1 ^ w = w
        assert_eq!(l.face_map(u, w, u).unwrap(), w);
    }

    #[test]
    fn face_map_contract_errors() {
        let l = instances::interval_cubic(1).unwrap();
        let atoms = l.atoms();
        let (u, w) = (atoms[0], atoms[1]);
        assert!(matches!(l.face_map(u, w, w), Err(Error::Contract(_))));
        assert!(matches!(l.face_map(l.one(), w, w), Err(Error::Contract(_))));
    }

    #[test]
    fn full_embedding_identity_and_trivial_inclusion() {
        let l = Arc::new(instances::interval_cubic(2).unwrap());
        let id = CubicHom::identity(l.clone());
        assert!(check_full_embedding(&id).unwrap());

        let one = Arc::new(instances::one_element());
        let b1 = Arc::new(instances::interval_cubic(1).unwrap());
        let incl = CubicHom::new(one, b1, vec![2]);
        incl.verify_embedding().unwrap();
        assert!(!check_full_embedding(&incl).unwrap());
    }

    #[test]
    fn delta_on_incomparable_pair_is_contract_error() {
        let l = instances::interval_cubic(1).unwrap();
        let atoms = l.atoms();
        assert!(matches!(l.delta(atoms[0], atoms[1]), Err(Error::Contract(_))));
    }

    #[test]
    fn delta_domain_mismatch_is_structure_error() {
        let l = instances::interval_cubic(1).unwrap();
        let atoms = l.atoms();
        let mut delta = l.delta.clone();
        delta[atoms[0]][atoms[1]] = Some(l.one()); // incomparable pair
        let broken =
            CubicAlgebra::from_tables("mutant", l.one(), l.join.clone(), delta, Origin::Imported)
                .unwrap();
        assert!(matches!(
            check_cubic_axioms(&broken, &cfg()),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn delta1_is_order_preserving_involution_on_intervals() {
        for n in 0..=2 {
            let l = instances::interval_cubic(n).unwrap();
            for x in l.elements() {
                assert_eq!(l.delta1(l.delta1(x)), x);
                for y in l.elements() {
                    if l.leq(x, y) {
                        assert!(l.leq(l.delta1(x), l.delta1(y)));
                    }
                }
            }
        }
    }

    #[test]
    fn induced_subalgebra_roundtrips_ids() {
        let l = instances::interval_cubic(2).unwrap();
        let sub = induced_subalgebra(&l, &l.elements().collect::<Vec<_>>()).unwrap();
        assert_eq!(sub.algebra.size(), l.size());
        for x in l.elements() {
            assert_eq!(sub.to_parent[sub.from_parent[&x]], x);
        }
        // a non-closed subset is rejected
        let atoms = l.atoms();
        assert!(induced_subalgebra(&l, &[atoms[0], l.one()]).is_err());
    }
}
