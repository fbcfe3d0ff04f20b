//! Filters of a cubic algebra as explicit sets, the lattice operations on
//! them, generated subalgebras and g-filters, the alpha/beta decomposition,
//! presentations, filter automorphisms, and the shifted filter `F_g`.
//!
//! A filter here is up-closed, contains the top, and is closed under the
//! (existing) pairwise meets of its members; in the finite case this forces
//! a minimum element, which the element-level oracles exploit.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde_json::json;

use crate::cubic::{induced_subalgebra, CubicAlgebra, CubicHom};
use crate::error::{Error, Result};
use crate::interval::IntervalAlgebra;
use crate::lattice::{BooleanAlgebra, Elem};
use crate::report::{LawReport, ReportBuilder};
use crate::scan::{collect_failures, CheckConfig, TupleDomain};

#[derive(Debug, Clone)]
pub struct Filter {
    algebra: Arc<CubicAlgebra>,
    members: Vec<Elem>,
}

impl PartialEq for Filter {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}
impl Eq for Filter {}
impl PartialOrd for Filter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Filter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl Filter {
    /// Accept a member set iff the filter invariants hold; the error names
    /// the violated invariant with a witness.
    pub fn validate(algebra: Arc<CubicAlgebra>, set: &[Elem]) -> Result<Filter> {
        let mut members: Vec<Elem> = set.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&x| x >= algebra.size()) {
            return Err(Error::InvalidFilter(format!("element {bad} out of range")));
        }
        if !members.contains(&algebra.one()) {
            return Err(Error::InvalidFilter("missing the top element".into()));
        }
        for &f in &members {
            for y in algebra.elements() {
                if algebra.leq(f, y) && !members.contains(&y) {
                    return Err(Error::InvalidFilter(format!(
                        "not up-closed: {f} is a member but {y} above it is not"
                    )));
                }
            }
        }
        for &f in &members {
            for &g in &members {
                match algebra.meet_if_exists(f, g) {
                    None => {
                        return Err(Error::InvalidFilter(format!(
                            "meet of members {f} and {g} does not exist"
                        )))
                    }
                    Some(m) if !members.contains(&m) => {
                        return Err(Error::InvalidFilter(format!(
                            "meet {m} of members {f} and {g} is not a member"
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(Filter { algebra, members })
    }

    /// The principal filter `[g, 1]`.
    pub fn principal(algebra: Arc<CubicAlgebra>, g: Elem) -> Filter {
        let members = algebra.up_set(g);
        Filter { algebra, members }
    }

    pub fn algebra(&self) -> &Arc<CubicAlgebra> {
        &self.algebra
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Local index of a member.
    pub fn position(&self, x: Elem) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    /// The minimum member; exists because members are meet-closed and the
    /// carrier is finite.
    pub fn min_member(&self) -> Elem {
        *self
            .members
            .iter()
            .find(|&&m| self.members.iter().all(|&x| self.algebra.leq(m, x)))
            .expect("finite meet-closed filter has a minimum")
    }

    fn require_same_algebra(&self, other: &Filter) -> Result<()> {
        if self.algebra.as_ref() != other.algebra.as_ref() {
            return Err(Error::Contract("filters live in different algebras".into()));
        }
        Ok(())
    }

    /// Set intersection, cross-checked against the join-set form
    /// `{f v g | f in F, g in G}` that the theory says it equals.
    pub fn intersect(&self, other: &Filter) -> Result<Filter> {
        self.require_same_algebra(other)?;
        let plain: Vec<Elem> = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        let mut join_set: BTreeSet<Elem> = BTreeSet::new();
        for &f in &self.members {
            for &g in &other.members {
                join_set.insert(self.algebra.join(f, g));
            }
        }
        let join_set: Vec<Elem> = join_set.into_iter().collect();
        if plain != join_set {
            return Err(Error::falsified(
                "filter_intersection_joins",
                format!("set intersection {plain:?} differs from join-set {join_set:?}"),
            ));
        }
        Ok(Filter {
            algebra: self.algebra.clone(),
            members: plain,
        })
    }

    /// The join of two filters: defined iff the union has the finite
    /// intersection property, in which case it is the meet-set
    /// `{f ^ g | f in F, g in G}`, cross-checked against the filter
    /// generated by the union.
    pub fn vee(&self, other: &Filter) -> Result<VeeOutcome> {
        self.require_same_algebra(other)?;
        let mut meets: BTreeSet<Elem> = BTreeSet::new();
        for &f in &self.members {
            for &g in &other.members {
                match self.algebra.meet_if_exists(f, g) {
                    Some(m) => {
                        meets.insert(m);
                    }
                    None => return Ok(VeeOutcome::NoFip { f, g }),
                }
            }
        }
        let display: Vec<Elem> = meets.into_iter().collect();
        let generated = generate_filter(&self.algebra, &{
            let mut u = self.members.clone();
            u.extend_from_slice(&other.members);
            u
        })
        .ok_or_else(|| {
            Error::falsified("filter_vee", "cross meets exist but the union generates no filter")
        })?;
        if display != generated {
            return Err(Error::falsified(
                "filter_vee",
                format!("meet-set {display:?} differs from generated filter {generated:?}"),
            ));
        }
        let filter = Filter::validate(self.algebra.clone(), &display)?;
        Ok(VeeOutcome::Defined(filter))
    }

    /// `vee` flattened to an option, for callers that treat fip failure as
    /// plain absence.
    pub fn vee_opt(&self, other: &Filter) -> Result<Option<Filter>> {
        Ok(match self.vee(other)? {
            VeeOutcome::Defined(f) => Some(f),
            VeeOutcome::NoFip { .. } => None,
        })
    }

    /// Pointwise image under `delta(1, .)`, itself a filter.
    pub fn delta1_image(&self) -> Result<Filter> {
        let set: Vec<Elem> = self.members.iter().map(|&f| self.algebra.delta1(f)).collect();
        Filter::validate(self.algebra.clone(), &set).map_err(|e| {
            Error::falsified("delta1_filter_image", format!("image is not a filter: {e}"))
        })
    }

    /// `{delta(x, y) | y <= x, both members}`.
    pub fn hat(&self) -> Vec<Elem> {
        let mut out = BTreeSet::new();
        for &x in &self.members {
            for &y in &self.members {
                if self.algebra.leq(y, x) {
                    out.insert(self.algebra.delta_raw(x, y).expect("comparable members"));
                }
            }
        }
        out.into_iter().collect()
    }

    /// Carrier of the subalgebra generated by the members: closure under
    /// join and delta. Kept independent of [`Filter::hat`]; their equality
    /// is a theorem under test, not an implementation shortcut.
    pub fn closure(&self) -> Vec<Elem> {
        let mut set: BTreeSet<Elem> = self.members.iter().copied().collect();
        loop {
            let items: Vec<Elem> = set.iter().copied().collect();
            let before = set.len();
            for (i, &x) in items.iter().enumerate() {
                for &y in &items[i..] {
                    set.insert(self.algebra.join(x, y));
                    if self.algebra.leq(x, y) {
                        set.insert(self.algebra.delta_raw(y, x).expect("comparable"));
                    }
                    if self.algebra.leq(y, x) {
                        set.insert(self.algebra.delta_raw(x, y).expect("comparable"));
                    }
                }
            }
            if set.len() == before {
                return set.into_iter().collect();
            }
        }
    }

    /// A generating filter: its closure is the whole carrier.
    pub fn is_gfilter(&self) -> bool {
        self.closure().len() == self.algebra.size()
    }

    /// Same generated subalgebra.
    pub fn similar(&self, other: &Filter) -> bool {
        self.closure() == other.closure()
    }

    /// Weak principality witness: some `g` with `F` inside `[g, 1]`.
    pub fn weakly_principal_witness(&self) -> Option<Elem> {
        self.algebra
            .elements()
            .find(|&g| self.members.iter().all(|&f| self.algebra.leq(g, f)))
    }
}

#[derive(Debug, Clone)]
pub enum VeeOutcome {
    Defined(Filter),
    /// The union lacks fip; `(f, g)` is a meetless witnessing pair.
    NoFip { f: Elem, g: Elem },
}

/// The filter generated by a set: close under existing pairwise meets and
/// then up-close. `None` if some pair of accumulated elements has no meet.
fn generate_filter(alg: &Arc<CubicAlgebra>, seed: &[Elem]) -> Option<Vec<Elem>> {
    let mut set: BTreeSet<Elem> = seed.iter().copied().collect();
    loop {
        let items: Vec<Elem> = set.iter().copied().collect();
        let before = set.len();
        for (i, &x) in items.iter().enumerate() {
            for &y in &items[i..] {
                set.insert(alg.meet_if_exists(x, y)?);
            }
        }
        if set.len() == before {
            break;
        }
    }
    let mut out: BTreeSet<Elem> = BTreeSet::new();
    for &x in &set {
        for y in alg.elements() {
            if alg.leq(x, y) {
                out.insert(y);
            }
        }
    }
    Some(out.into_iter().collect())
}

/// All filters, one per principal generator (sound in the finite case). For
/// carriers of at most 9 elements the principality assumption itself is
/// guarded by an exhaustive subset scan.
pub fn enumerate_filters(alg: &Arc<CubicAlgebra>) -> Result<Vec<Filter>> {
    let mut filters: Vec<Filter> = alg
        .elements()
        .map(|g| Filter::principal(alg.clone(), g))
        .collect();
    filters.sort();
    filters.dedup();
    if alg.size() <= 9 {
        let mut scanned = scan_filters(alg);
        scanned.sort();
        let principal: Vec<Vec<Elem>> = filters.iter().map(|f| f.members.clone()).collect();
        if principal != scanned {
            return Err(Error::falsified(
                "principal_filters",
                "subset scan found a filter that is not principal",
            ));
        }
    }
    Ok(filters)
}

/// Exhaustive subset scan for filters of a small cubic algebra.
pub fn scan_filters(alg: &Arc<CubicAlgebra>) -> Vec<Vec<Elem>> {
    let n = alg.size();
    assert!(n <= 20, "subset scan is exponential");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<Elem> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if Filter::validate(alg.clone(), &set).is_ok() {
            out.push(set);
        }
    }
    out
}

pub fn enumerate_gfilters(alg: &Arc<CubicAlgebra>) -> Result<Vec<Filter>> {
    Ok(enumerate_filters(alg)?
        .into_iter()
        .filter(|f| f.is_gfilter())
        .collect())
}

/// The unique decomposition `x = delta(alpha(x), beta(x))` with
/// `beta(x) <= alpha(x)`, both in the g-filter.
#[derive(Debug, Clone)]
pub struct AlphaBeta {
    pub gfilter: Filter,
    pub alpha: Vec<Elem>,
    pub beta: Vec<Elem>,
}

pub fn alpha_beta(f: &Filter) -> Result<AlphaBeta> {
    if !f.is_gfilter() {
        return Err(Error::Contract(format!(
            "alpha/beta needs a g-filter; {:?} does not generate",
            f.members()
        )));
    }
    let alg = f.algebra();
    let mut alpha = vec![0; alg.size()];
    let mut beta = vec![0; alg.size()];
    for x in alg.elements() {
        let mut found = Vec::new();
        for &a in f.members() {
            for &b in f.members() {
                if alg.leq(b, a) && alg.delta_raw(a, b) == Some(x) {
                    found.push((a, b));
                }
            }
        }
        match found.as_slice() {
            [(a, b)] => {
                alpha[x] = *a;
                beta[x] = *b;
            }
            _ => {
                return Err(Error::falsified(
                    "alpha_beta_unique",
                    format!("element {x} has {} decompositions over the g-filter", found.len()),
                ))
            }
        }
    }
    Ok(AlphaBeta {
        gfilter: f.clone(),
        alpha,
        beta,
    })
}

/// The Boolean algebra a filter carries as the interval `[min, 1]`:
/// induced join and meet, complement found by scan and then verified. That
/// every filter of a cubic algebra is locally Boolean is theory under test,
/// so failures surface as falsifications.
pub fn boolean_of_filter(f: &Filter) -> Result<BooleanAlgebra> {
    let alg = f.algebra();
    let k = f.len();
    let min = f.min_member();
    let loc = |x: Elem| f.position(x);
    let mut join = vec![vec![0; k]; k];
    let mut meet = vec![vec![0; k]; k];
    let mut comp = vec![0; k];
    for i in 0..k {
        for j in 0..k {
            let a = f.members()[i];
            let b = f.members()[j];
            join[i][j] = loc(alg.join(a, b)).ok_or_else(|| {
                Error::falsified("filter_boolean", format!("join of {a},{b} leaves the filter"))
            })?;
            let m = alg.meet_if_exists(a, b).ok_or_else(|| {
                Error::falsified("filter_boolean", format!("meet of members {a},{b} missing"))
            })?;
            meet[i][j] = loc(m).ok_or_else(|| {
                Error::falsified("filter_boolean", format!("meet of {a},{b} leaves the filter"))
            })?;
        }
    }
    for i in 0..k {
        let a = f.members()[i];
        let candidates: Vec<Elem> = f
            .members()
            .iter()
            .copied()
            .filter(|&c| {
                alg.join(a, c) == alg.one() && alg.meet_if_exists(a, c) == Some(min)
            })
            .collect();
        match candidates.as_slice() {
            [c] => comp[i] = loc(*c).unwrap(),
            other => {
                return Err(Error::falsified(
                    "filter_boolean",
                    format!("member {a} has {} relative complements", other.len()),
                ))
            }
        }
    }
    BooleanAlgebra::from_tables(join, meet, comp, loc(min).unwrap(), loc(alg.one()).unwrap())
}

/// A presentation of the algebra over one of its g-filters: the verified
/// cubic isomorphism `x |-> <delta(1,x) v beta(x), x v beta(x)>` onto the
/// interval algebra of the filter.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub source: Arc<CubicAlgebra>,
    pub gfilter: Filter,
    pub ab: AlphaBeta,
    pub interval: IntervalAlgebra,
    /// Source id -> interval id.
    pub map: Vec<Elem>,
    /// Interval id -> source id.
    pub inverse: Vec<Elem>,
}

impl Presentation {
    pub fn hom(&self) -> CubicHom {
        CubicHom::new(
            self.source.clone(),
            self.interval.cubic().clone(),
            self.map.clone(),
        )
    }
}

pub fn presentation_from_gfilter(f: &Filter) -> Result<Presentation> {
    let alg = f.algebra().clone();
    let ab = alpha_beta(f)?;
    let base = boolean_of_filter(f)?.as_implication_lattice();
    let interval = IntervalAlgebra::build(format!("I[{}-gen]", f.min_member()), base)?;
    if interval.size() != alg.size() {
        return Err(Error::falsified(
            "presentation_iso",
            format!(
                "carrier sizes differ: |L| = {}, |I(F)| = {}",
                alg.size(),
                interval.size()
            ),
        ));
    }
    let mut map = vec![0; alg.size()];
    for x in alg.elements() {
        let first = alg.join(alg.delta1(x), ab.beta[x]);
        let second = alg.join(x, ab.beta[x]);
        let (a, b) = match (f.position(first), f.position(second)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::falsified(
                    "presentation_iso",
                    format!("image components of {x} are not in the g-filter"),
                ))
            }
        };
        map[x] = interval.pair_id(a, b).ok_or_else(|| {
            Error::falsified("presentation_iso", format!("image of {x} is not a valid pair"))
        })?;
    }
    let hom = CubicHom::new(alg.clone(), interval.cubic().clone(), map.clone());
    hom.verify_embedding()
        .map_err(|e| Error::falsified("presentation_iso", e.to_string()))?;
    let mut inverse = vec![0; interval.size()];
    for x in alg.elements() {
        inverse[map[x]] = x;
    }
    Ok(Presentation {
        source: alg,
        gfilter: f.clone(),
        ab,
        interval,
        map,
        inverse,
    })
}

/// The cubic automorphism extending `beta_G : F -> G`, as the composite
/// through the two presentations and the lifted pair map.
pub fn filter_automorphism(f: &Filter, g: &Filter) -> Result<CubicHom> {
    let pf = presentation_from_gfilter(f)?;
    let pg = presentation_from_gfilter(g)?;
    automorphism_via(&pf, &pg)
}

/// Same as [`filter_automorphism`] but reusing precomputed presentations.
pub fn automorphism_via(pf: &Presentation, pg: &Presentation) -> Result<CubicHom> {
    let alg = pf.source.clone();
    let to_g_local: Vec<usize> = pf
        .gfilter
        .members()
        .iter()
        .map(|&x| {
            pg.gfilter.position(pg.ab.beta[x]).ok_or_else(|| {
                Error::falsified("filter_automorphism", format!("beta({x}) left the g-filter"))
            })
        })
        .collect::<Result<_>>()?;
    let map: Vec<Elem> = alg
        .elements()
        .map(|x| {
            let (a, b) = pf.interval.pair(pf.map[x]);
            let q = pg
                .interval
                .pair_id(to_g_local[a], to_g_local[b])
                .ok_or_else(|| {
                    Error::falsified(
                        "filter_automorphism",
                        format!("lifted pair for {x} is not valid"),
                    )
                })?;
            Ok(pg.inverse[q])
        })
        .collect::<Result<_>>()?;
    let hom = CubicHom::new(alg.clone(), alg, map);
    hom.verify_embedding()
        .map_err(|e| Error::falsified("filter_automorphism", e.to_string()))?;
    Ok(hom)
}

/// `F n G` computed through beta as `{f v beta_G(f) | f in F}`; only valid
/// when the two filters generate the same subalgebra.
pub fn intersect_via_beta(f: &Filter, g: &Filter) -> Result<Filter> {
    f.require_same_algebra(g)?;
    if !f.similar(g) {
        return Err(Error::Contract(
            "beta-intersection needs filters generating the same subalgebra".into(),
        ));
    }
    let closure = f.closure();
    let alg = f.algebra().clone();
    let sub = induced_subalgebra(&alg, &closure)?;
    let g_local: Vec<Elem> = g.members().iter().map(|m| sub.from_parent[m]).collect();
    let g_in_sub = Filter::validate(sub.algebra.clone(), &g_local)?;
    let ab = alpha_beta(&g_in_sub)?;
    let set: Vec<Elem> = f
        .members()
        .iter()
        .map(|&x| {
            let xl = sub.from_parent[&x];
            sub.to_parent[sub.algebra.join(xl, ab.beta[xl])]
        })
        .collect();
    Filter::validate(alg, &set)
}

/// The shifted filter `F_g = {delta(g v f, f) | f in F}`.
pub fn filter_shift(f: &Filter, g: Elem) -> Result<Filter> {
    let alg = f.algebra();
    let set: Vec<Elem> = f
        .members()
        .iter()
        .map(|&x| {
            let j = alg.join(g, x);
            alg.delta_raw(j, x).expect("x below g v x")
        })
        .collect();
    Filter::validate(alg.clone(), &set)
        .map_err(|e| Error::falsified("shift_filter", format!("F_g is not a filter: {e}")))
}

/// The filter `g -> F = {g -> f | f in F}` of element-level relative
/// complements.
pub fn arrow_filter(g: Elem, f: &Filter) -> Result<Filter> {
    let alg = f.algebra();
    let set: Vec<Elem> = f.members().iter().map(|&x| alg.xy(g, x)).collect();
    Filter::validate(alg.clone(), &set)
        .map_err(|e| Error::falsified("arrow_filter", format!("g -> F is not a filter: {e}")))
}

fn members_json(f: &Filter) -> serde_json::Value {
    json!(f.members())
}

/// Lattice laws of intersection and vee plus the generated-subalgebra
/// theorems: hat equals closure, similarity via beta-intersection, and weak
/// principality against the minimum element.
pub fn check_filter_base_laws(alg: &Arc<CubicAlgebra>, cfg: &CheckConfig) -> Result<LawReport> {
    let mut rb = ReportBuilder::new(alg.name(), "filters", cfg.seed);
    let filters = enumerate_filters(alg)?;
    let n = filters.len();

    let hat_eq = collect_failures(cfg.mode, &filters, |f| {
        (f.hat() != f.closure()).then(|| members_json(f))
    });
    rb.law("hat_equals_generated_subalgebra", n as u64, None, hat_eq);

    let pairs = TupleDomain::new([n, n], cfg.budget, cfg.seed);
    let idem: Vec<serde_json::Value> = filters
        .iter()
        .filter_map(|f| {
            let ii = f.intersect(f).ok()?;
            let vv = f.vee_opt(f).ok()??;
            (&ii != f || &vv != f).then(|| members_json(f))
        })
        .collect();
    rb.law("intersect_vee_idempotent", n as u64, None, idem);

    let comm = collect_failures(cfg.mode, &pairs.tuples, |&[i, j]| {
        let (f, g) = (&filters[i], &filters[j]);
        let int_comm = f.intersect(g).ok().map(|x| x.members)
            != g.intersect(f).ok().map(|x| x.members);
        let vee_comm = f.vee_opt(g).ok().flatten().map(|x| x.members)
            != g.vee_opt(f).ok().flatten().map(|x| x.members);
        (int_comm || vee_comm).then(|| json!({"f": i, "g": j}))
    });
    rb.law(
        "intersect_vee_commutative",
        pairs.tuples.len() as u64,
        pairs.sample_seed,
        comm,
    );

    let absorb = collect_failures(cfg.mode, &pairs.tuples, |&[i, j]| {
        let (f, g) = (&filters[i], &filters[j]);
        // F n (F v G) = F when the vee exists; F v (F n G) = F always
        let one = match f.vee_opt(g).ok()? {
            Some(v) => f.intersect(&v).ok()?.members != f.members,
            None => false,
        };
        let inter = f.intersect(g).ok()?;
        let two = match f.vee_opt(&inter).ok()? {
            Some(v) => v.members != f.members,
            None => true,
        };
        (one || two).then(|| json!({"f": i, "g": j}))
    });
    rb.law(
        "intersect_vee_absorption",
        pairs.tuples.len() as u64,
        pairs.sample_seed,
        absorb,
    );

    let triples = TupleDomain::new([n, n, n], cfg.budget, cfg.seed);
    let assoc = collect_failures(cfg.mode, &triples.tuples, |&[i, j, k]| {
        let (f, g, h) = (&filters[i], &filters[j], &filters[k]);
        let int_assoc = f
            .intersect(g)
            .and_then(|x| x.intersect(h))
            .ok()
            .map(|x| x.members)
            != g.intersect(h).and_then(|x| f.intersect(&x)).ok().map(|x| x.members);
        // vee associativity compared only where all joins exist
        let lhs = f
            .vee_opt(g)
            .ok()
            .flatten()
            .and_then(|x| x.vee_opt(h).ok().flatten());
        let rhs = g
            .vee_opt(h)
            .ok()
            .flatten()
            .and_then(|x| f.vee_opt(&x).ok().flatten());
        let vee_assoc = match (&lhs, &rhs) {
            (Some(a), Some(b)) => a.members != b.members,
            _ => false,
        };
        (int_assoc || vee_assoc).then(|| json!({"f": i, "g": j, "h": k}))
    });
    rb.law(
        "intersect_vee_associative",
        triples.tuples.len() as u64,
        triples.sample_seed,
        assoc,
    );

    let sim_pairs: Vec<[usize; 2]> = pairs.tuples.clone();
    let beta_int = collect_failures(cfg.mode, &sim_pairs, |&[i, j]| {
        let (f, g) = (&filters[i], &filters[j]);
        if !f.similar(g) {
            return None;
        }
        let via = intersect_via_beta(f, g).ok()?;
        let plain = f.intersect(g).ok()?;
        (via != plain).then(|| json!({"f": i, "g": j}))
    });
    rb.law(
        "beta_intersection_agrees",
        sim_pairs.len() as u64,
        pairs.sample_seed,
        beta_int,
    );

    let weak = collect_failures(cfg.mode, &filters, |f| {
        let witness = f.weakly_principal_witness();
        let min = f.min_member();
        let ok = match witness {
            Some(g) => f.algebra().leq(g, min),
            None => false, // finite filters always have a minimum below them
        };
        (!ok).then(|| members_json(f))
    });
    rb.law("weakly_principal_iff_min", n as u64, None, weak);

    Ok(rb.finish())
}

/// Distributivity on subfilter triples of each filter: intersection over
/// vee, `G n (H v K) = (G n H) v (G n K)`, plus the dual vee over
/// intersection. Subfilters of one filter always have defined joins, so
/// both identities are total here.
pub fn check_distributivity(alg: &Arc<CubicAlgebra>, cfg: &CheckConfig) -> Result<LawReport> {
    let mut rb = ReportBuilder::new(alg.name(), "filters", cfg.seed);
    let filters = enumerate_filters(alg)?;
    // subfilters of F are the principal filters at members of F
    let mut tuples: Vec<[usize; 4]> = Vec::new();
    for (fi, f) in filters.iter().enumerate() {
        let k = f.len();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    tuples.push([fi, a, b, c]);
                }
            }
        }
    }
    let (tuples, seed) = sample_tuples(tuples, cfg);
    let sub = |f: &Filter, i: usize| Filter::principal(f.algebra().clone(), f.members()[i]);

    let meet_over_join = collect_failures(cfg.mode, &tuples, |&[fi, a, b, c]| {
        let f = &filters[fi];
        let (g, h, k) = (sub(f, a), sub(f, b), sub(f, c));
        let res = (|| -> Result<bool> {
            let hk = match h.vee(&k)? {
                VeeOutcome::Defined(x) => x,
                VeeOutcome::NoFip { f, g } => {
                    return Err(Error::falsified(
                        "subfilter_fip",
                        format!("subfilters of one filter lost fip at ({f},{g})"),
                    ))
                }
            };
            let lhs = g.intersect(&hk)?;
            let gh = g.intersect(&h)?;
            let gk = g.intersect(&k)?;
            let rhs = match gh.vee(&gk)? {
                VeeOutcome::Defined(x) => x,
                VeeOutcome::NoFip { .. } => return Ok(false),
            };
            Ok(lhs == rhs)
        })();
        match res {
            Ok(true) => None,
            Ok(false) => Some(json!({"filter": fi, "g": a, "h": b, "k": c})),
            Err(e) => Some(json!({"filter": fi, "error": e.to_string()})),
        }
    });
    rb.law(
        "distributivity_intersect_over_vee",
        tuples.len() as u64,
        seed,
        meet_over_join,
    );

    let join_over_meet = collect_failures(cfg.mode, &tuples, |&[fi, a, b, c]| {
        let f = &filters[fi];
        let (g, h, k) = (sub(f, a), sub(f, b), sub(f, c));
        let res = (|| -> Result<bool> {
            let hk = h.intersect(&k)?;
            let lhs = match g.vee(&hk)? {
                VeeOutcome::Defined(x) => x,
                VeeOutcome::NoFip { .. } => return Ok(false),
            };
            let gh = match g.vee(&h)? {
                VeeOutcome::Defined(x) => x,
                VeeOutcome::NoFip { .. } => return Ok(false),
            };
            let gk = match g.vee(&k)? {
                VeeOutcome::Defined(x) => x,
                VeeOutcome::NoFip { .. } => return Ok(false),
            };
            Ok(lhs == gh.intersect(&gk)?)
        })();
        match res {
            Ok(true) => None,
            Ok(false) => Some(json!({"filter": fi, "g": a, "h": b, "k": c})),
            Err(e) => Some(json!({"filter": fi, "error": e.to_string()})),
        }
    });
    rb.law(
        "distributivity_vee_over_intersect",
        tuples.len() as u64,
        seed,
        join_over_meet,
    );
    Ok(rb.finish())
}

fn sample_tuples<const K: usize>(
    tuples: Vec<[usize; K]>,
    cfg: &CheckConfig,
) -> (Vec<[usize; K]>, Option<u64>) {
    if tuples.len() as u64 <= cfg.budget {
        return (tuples, None);
    }
    let picker = TupleDomain::new([tuples.len()], cfg.budget, cfg.seed);
    (
        picker.tuples.iter().map(|&[i]| tuples[i]).collect(),
        Some(cfg.seed),
    )
}

/// Uniqueness and structure of the alpha/beta decomposition: fixed points
/// on the filter, beta as an implication isomorphism between g-filters,
/// alpha as an implication homomorphism, and the beta round trip.
pub fn check_alpha_beta_laws(alg: &Arc<CubicAlgebra>, cfg: &CheckConfig) -> Result<LawReport> {
    let mut rb = ReportBuilder::new(alg.name(), "filters", cfg.seed);
    let gfilters = enumerate_gfilters(alg)?;
    let mut abs = Vec::new();
    let mut unique_viol = Vec::new();
    for f in &gfilters {
        match alpha_beta(f) {
            Ok(ab) => abs.push(ab),
            Err(e) => unique_viol.push(json!({"gfilter": f.members(), "error": e.to_string()})),
        }
    }
    rb.law(
        "alpha_beta_unique",
        (gfilters.len() * alg.size()) as u64,
        None,
        unique_viol,
    );

    let fixed = collect_failures(cfg.mode, &abs, |ab| {
        ab.gfilter
            .members()
            .iter()
            .find(|&&x| ab.alpha[x] != x || ab.beta[x] != x)
            .map(|&x| json!({"x": x}))
    });
    rb.law("alpha_beta_fix_filter", abs.len() as u64, None, fixed);

    // beta restricted to another g-filter: implication isomorphism; alpha:
    // implication homomorphism (join and the derived implication xy)
    let mut pair_idx = Vec::new();
    for i in 0..abs.len() {
        for j in 0..abs.len() {
            pair_idx.push([i, j]);
        }
    }
    let beta_iso = collect_failures(cfg.mode, &pair_idx, |&[i, j]| {
        let ab_f = &abs[i]; // maps into F
        let g = &abs[j].gfilter;
        let betas: Vec<Elem> = g.members().iter().map(|&x| ab_f.beta[x]).collect();
        let mut sorted = betas.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != ab_f.gfilter.members() {
            return Some(json!({"f": i, "g": j, "reason": "beta not bijective onto F"}));
        }
        for (xi, &x) in g.members().iter().enumerate() {
            for &y in g.members() {
                let bx = betas[xi];
                let by = ab_f.beta[y];
                if ab_f.beta[alg.join(x, y)] != alg.join(bx, by) {
                    return Some(json!({"f": i, "g": j, "x": x, "y": y, "op": "join"}));
                }
                if ab_f.beta[alg.xy(x, y)] != alg.xy(bx, by) {
                    return Some(json!({"f": i, "g": j, "x": x, "y": y, "op": "imp"}));
                }
            }
        }
        None
    });
    rb.law("beta_implication_iso", pair_idx.len() as u64, None, beta_iso);

    let alpha_hom = collect_failures(cfg.mode, &pair_idx, |&[i, j]| {
        let ab_f = &abs[i];
        let g = &abs[j].gfilter;
        for &x in g.members() {
            for &y in g.members() {
                let (ax, ay) = (ab_f.alpha[x], ab_f.alpha[y]);
                if ab_f.alpha[alg.join(x, y)] != alg.join(ax, ay) {
                    return Some(json!({"f": i, "g": j, "x": x, "y": y, "op": "join"}));
                }
                if ab_f.alpha[alg.xy(x, y)] != alg.xy(ax, ay) {
                    return Some(json!({"f": i, "g": j, "x": x, "y": y, "op": "imp"}));
                }
            }
        }
        None
    });
    rb.law("alpha_implication_hom", pair_idx.len() as u64, None, alpha_hom);

    let roundtrip = collect_failures(cfg.mode, &pair_idx, |&[i, j]| {
        let ab_f = &abs[i];
        let ab_g = &abs[j];
        ab_f.gfilter
            .members()
            .iter()
            .find(|&&x| ab_f.beta[ab_g.beta[x]] != x)
            .map(|&x| json!({"f": i, "g": j, "x": x}))
    });
    rb.law("beta_roundtrip_identity", pair_idx.len() as u64, None, roundtrip);

    Ok(rb.finish())
}

/// Presentations and filter automorphisms: every g-filter presents the
/// algebra, the identity case collapses, and the automorphism carries one
/// g-filter onto the other.
pub fn check_presentation_laws(alg: &Arc<CubicAlgebra>, cfg: &CheckConfig) -> Result<LawReport> {
    let mut rb = ReportBuilder::new(alg.name(), "filters", cfg.seed);
    let gfilters = enumerate_gfilters(alg)?;
    let mut presentations = Vec::new();
    let mut iso_viol = Vec::new();
    for f in &gfilters {
        match presentation_from_gfilter(f) {
            Ok(p) => presentations.push(p),
            Err(e) => iso_viol.push(json!({"gfilter": f.members(), "error": e.to_string()})),
        }
    }
    rb.law("presentation_iso", gfilters.len() as u64, None, iso_viol);

    let filter_image = collect_failures(cfg.mode, &presentations, |p| {
        // members of the g-filter land on pairs with top first component
        let top = p.interval.base().top();
        p.gfilter
            .members()
            .iter()
            .find(|&&x| {
                let (a, b) = p.interval.pair(p.map[x]);
                a != top || p.gfilter.members()[b] != x
            })
            .map(|&x| json!({"x": x}))
    });
    rb.law(
        "presentation_fixes_filter",
        presentations.len() as u64,
        None,
        filter_image,
    );

    let roundtrip = collect_failures(cfg.mode, &presentations, |p| {
        alg.elements()
            .find(|&x| p.inverse[p.map[x]] != x)
            .map(|x| json!({"x": x}))
    });
    rb.law(
        "presentation_roundtrip",
        presentations.len() as u64,
        None,
        roundtrip,
    );

    let mut auto_viol = Vec::new();
    let mut cases = 0u64;
    for pf in &presentations {
        for pg in &presentations {
            cases += 1;
            match automorphism_via(pf, pg) {
                Ok(phi) => {
                    if pf.gfilter == pg.gfilter
                        && phi.map != alg.elements().collect::<Vec<_>>()
                    {
                        auto_viol.push(json!({
                            "f": pf.gfilter.members(),
                            "reason": "identity pair gave a nonidentity map"
                        }));
                    }
                    let mut image: Vec<Elem> =
                        pf.gfilter.members().iter().map(|&x| phi.apply(x)).collect();
                    image.sort_unstable();
                    if image != pg.gfilter.members() {
                        auto_viol.push(json!({
                            "f": pf.gfilter.members(),
                            "g": pg.gfilter.members(),
                            "reason": "automorphism does not map F onto G"
                        }));
                    }
                }
                Err(e) => auto_viol.push(json!({"error": e.to_string()})),
            }
        }
    }
    rb.law("filter_automorphism", cases, None, auto_viol);

    Ok(rb.finish())
}

/// The shifted-filter laws: the intersection identities, idempotence, the
/// principal special cases, the converse recovery of `G` as `F_g`, and the
/// arrow filter's two routes.
pub fn check_shift_laws(alg: &Arc<CubicAlgebra>, cfg: &CheckConfig) -> Result<LawReport> {
    let mut rb = ReportBuilder::new(alg.name(), "filters", cfg.seed);
    let filters = enumerate_filters(alg)?;
    let nf = filters.len();
    let ne = alg.size();

    let fe = TupleDomain::new([nf, ne], cfg.budget, cfg.seed);
    let intersect_law = collect_failures(cfg.mode, &fe.tuples, |&[i, g]| {
        let f = &filters[i];
        let res = (|| -> Result<bool> {
            let fg = filter_shift(f, g)?;
            let lhs = f.intersect(&fg)?;
            let rhs = Filter::principal(alg.clone(), g).intersect(f)?;
            Ok(lhs == rhs)
        })();
        match res {
            Ok(true) => None,
            Ok(false) => Some(json!({"filter": f.members(), "g": g})),
            Err(e) => Some(json!({"filter": f.members(), "g": g, "error": e.to_string()})),
        }
    });
    rb.law(
        "shift_intersection",
        fe.tuples.len() as u64,
        fe.sample_seed,
        intersect_law,
    );

    let member_shift = collect_failures(cfg.mode, &fe.tuples, |&[i, g]| {
        let f = &filters[i];
        if !f.contains(g) {
            return None;
        }
        let ok = (|| -> Result<bool> {
            let fg = filter_shift(f, g)?;
            Ok(f.intersect(&fg)? == Filter::principal(alg.clone(), g))
        })()
        .unwrap_or(false);
        (!ok).then(|| json!({"filter": f.members(), "g": g}))
    });
    rb.law(
        "shift_member_principal",
        fe.tuples.len() as u64,
        fe.sample_seed,
        member_shift,
    );

    let at_one = collect_failures(cfg.mode, &filters, |f| {
        let ok = (|| -> Result<bool> {
            Ok(filter_shift(f, alg.one())? == f.delta1_image()?)
        })()
        .unwrap_or(false);
        (!ok).then(|| members_json(f))
    });
    rb.law("shift_at_one_is_delta1", nf as u64, None, at_one);

    let principal_shift = collect_failures(cfg.mode, &fe.tuples, |&[i, g]| {
        let f = &filters[i];
        let h = f.min_member(); // principal filter [h, 1]
        if f != &Filter::principal(alg.clone(), h) {
            return None;
        }
        let ok = (|| -> Result<bool> {
            let shifted = filter_shift(f, g)?;
            let jd = alg.delta_raw(alg.join(g, h), h).expect("comparable");
            Ok(shifted == Filter::principal(alg.clone(), jd))
        })()
        .unwrap_or(false);
        (!ok).then(|| json!({"h": h, "g": g}))
    });
    rb.law(
        "shift_principal_form",
        fe.tuples.len() as u64,
        fe.sample_seed,
        principal_shift,
    );

    let preserve = collect_failures(cfg.mode, &fe.tuples, |&[i, g]| {
        let f = &filters[i];
        let ok = (|| -> Result<bool> { Ok(filter_shift(f, g)?.similar(f)) })().unwrap_or(false);
        (!ok).then(|| json!({"filter": f.members(), "g": g}))
    });
    rb.law(
        "shift_preserves_subalgebra",
        fe.tuples.len() as u64,
        fe.sample_seed,
        preserve,
    );

    let involution = collect_failures(cfg.mode, &fe.tuples, |&[i, g]| {
        let f = &filters[i];
        if !f.contains(g) {
            return None;
        }
        let ok = (|| -> Result<bool> { Ok(filter_shift(&filter_shift(f, g)?, g)? == *f) })()
            .unwrap_or(false);
        (!ok).then(|| json!({"filter": f.members(), "g": g}))
    });
    rb.law(
        "shift_involution",
        fe.tuples.len() as u64,
        fe.sample_seed,
        involution,
    );

    let fgh = TupleDomain::new([nf, ne, ne], cfg.budget, cfg.seed);
    let join_law = collect_failures(cfg.mode, &fgh.tuples, |&[i, g, h]| {
        let f = &filters[i];
        if !f.contains(g) || !f.contains(h) {
            return None;
        }
        let ok = (|| -> Result<bool> {
            let fg = filter_shift(f, g)?;
            Ok(filter_shift(&fg, h)? == filter_shift(&fg, alg.join(g, h))?)
        })()
        .unwrap_or(false);
        (!ok).then(|| json!({"filter": f.members(), "g": g, "h": h}))
    });
    rb.law(
        "shift_join_absorbs",
        fgh.tuples.len() as u64,
        fgh.sample_seed,
        join_law,
    );

    // converse: if G and F generate alike and F n G = [g, 1] then G = F_g
    let ff = TupleDomain::new([nf, nf], cfg.budget, cfg.seed);
    let converse = collect_failures(cfg.mode, &ff.tuples, |&[i, j]| {
        let (f, g) = (&filters[i], &filters[j]);
        if !f.similar(g) {
            return None;
        }
        let ok = (|| -> Result<bool> {
            let inter = f.intersect(g)?;
            let gen = inter.min_member();
            if inter != Filter::principal(alg.clone(), gen) {
                return Ok(true); // not principal: hypothesis void
            }
            Ok(*g == filter_shift(f, gen)?)
        })()
        .unwrap_or(false);
        (!ok).then(|| json!({"f": f.members(), "g": g.members()}))
    });
    rb.law(
        "shift_converse",
        ff.tuples.len() as u64,
        ff.sample_seed,
        converse,
    );

    let arrow_two_routes = collect_failures(cfg.mode, &fe.tuples, |&[i, g]| {
        let f = &filters[i];
        let ok = (|| -> Result<bool> {
            let direct = arrow_filter(g, f)?;
            let via = filter_shift(f, g)?.delta1_image()?.intersect(f)?;
            Ok(direct == via)
        })()
        .unwrap_or(false);
        (!ok).then(|| json!({"filter": f.members(), "g": g}))
    });
    rb.law(
        "arrow_filter_two_routes",
        fe.tuples.len() as u64,
        fe.sample_seed,
        arrow_two_routes,
    );

    let arrow_top = collect_failures(cfg.mode, &filters, |f| {
        let ok = arrow_filter(alg.one(), f).map(|a| a == *f).unwrap_or(false);
        (!ok).then(|| members_json(f))
    });
    rb.law("arrow_at_one_identity", nf as u64, None, arrow_top);

    Ok(rb.finish())
}

/// If the algebra has a g-filter it is a filter algebra; the witness is the
/// g-filter together with the presentation it induces.
pub fn is_filter_algebra(alg: &Arc<CubicAlgebra>) -> Result<Option<(Filter, Presentation)>> {
    let gfilters = enumerate_gfilters(alg)?;
    match gfilters.into_iter().next() {
        Some(f) => {
            let p = presentation_from_gfilter(&f)?;
            Ok(Some((f, p)))
        }
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn arc(n: u32) -> Arc<CubicAlgebra> {
        Arc::new(instances::interval_cubic(n).unwrap())
    }

    fn cfg() -> CheckConfig {
        CheckConfig::default()
    }

    #[test]
    fn validate_accepts_and_rejects() {
        let l = arc(1);
        let atoms = l.atoms();
        let (u, w) = (atoms[0], atoms[1]);
        assert!(Filter::validate(l.clone(), &[l.one()]).is_ok());
        assert!(Filter::validate(l.clone(), &[u, l.one()]).is_ok());
        // u ^ w does not exist
        let err = Filter::validate(l.clone(), &[u, w, l.one()]).unwrap_err();
        assert!(matches!(err, Error::InvalidFilter(_)), "{err}");
        // not up-closed
        let l2 = arc(2);
        let v = l2.atoms()[0];
        let err = Filter::validate(l2.clone(), &[v]).unwrap_err();
        assert!(err.to_string().contains("top") || err.to_string().contains("up-closed"));
    }

    #[test]
    fn intersection_examples() {
        let l = arc(1);
        let atoms = l.atoms();
        let fu = Filter::principal(l.clone(), atoms[0]);
        let fw = Filter::principal(l.clone(), atoms[1]);
        let top = Filter::principal(l.clone(), l.one());
        assert_eq!(fu.intersect(&fu).unwrap(), fu);
        assert_eq!(fu.intersect(&fw).unwrap(), top);
        assert_eq!(fu.intersect(&top).unwrap(), top);
    }

    #[test]
    fn vee_examples() {
        let l = arc(1);
        let atoms = l.atoms();
        let fu = Filter::principal(l.clone(), atoms[0]);
        let fw = Filter::principal(l.clone(), atoms[1]);
        match fu.vee(&fu).unwrap() {
            VeeOutcome::Defined(v) => assert_eq!(v, fu),
            _ => panic!("F v F must exist"),
        }
        match fu.vee(&fw).unwrap() {
            VeeOutcome::NoFip { f, g } => {
                assert_eq!(l.meet_if_exists(f, g), None);
            }
            _ => panic!("vertex filters of I(B1) have no join"),
        }
        // principal oracle: [x,1] v [y,1] = [x ^ y, 1] when the meet exists
        let l2 = arc(2);
        for x in l2.elements() {
            for y in l2.elements() {
                let fx = Filter::principal(l2.clone(), x);
                let fy = Filter::principal(l2.clone(), y);
                match (l2.meet_if_exists(x, y), fx.vee(&fy).unwrap()) {
                    (Some(m), VeeOutcome::Defined(v)) => {
                        assert_eq!(v, Filter::principal(l2.clone(), m))
                    }
                    (None, VeeOutcome::NoFip { .. }) => {}
                    (m, v) => panic!("mismatch at ({x},{y}): meet {m:?}, vee {v:?}"),
                }
            }
        }
    }

    #[test]
    fn hat_and_closure_examples() {
        let l = arc(1);
        let atoms = l.atoms();
        let top = Filter::principal(l.clone(), l.one());
        assert_eq!(top.hat(), vec![l.one()]);
        assert_eq!(top.closure(), vec![l.one()]);
        let fu = Filter::principal(l.clone(), atoms[0]);
        assert_eq!(fu.closure(), l.elements().collect::<Vec<_>>());
        assert_eq!(fu.hat(), fu.closure());
    }

    #[test]
    fn gfilter_counts() {
        for (n, expect) in [(0u32, 1usize), (1, 2), (2, 4)] {
            let l = arc(n);
            let g = enumerate_gfilters(&l).unwrap();
            assert_eq!(g.len(), expect, "n={n}");
            // g-filters of an interval algebra are the vertex filters
            if n > 0 {
                let vertex: Vec<Filter> = l
                    .atoms()
                    .into_iter()
                    .map(|v| Filter::principal(l.clone(), v))
                    .collect();
                assert_eq!(g, vertex);
            }
        }
        let l = arc(1);
        assert!(!Filter::principal(l.clone(), l.one()).is_gfilter());
    }

    #[test]
    fn similarity_examples() {
        let l = arc(2);
        let g = enumerate_gfilters(&l).unwrap();
        assert!(g[0].similar(&g[0]));
        assert!(g[0].similar(&g[1]));
        let top = Filter::principal(l.clone(), l.one());
        assert!(!g[0].similar(&top));
    }

    #[test]
    fn alpha_beta_examples() {
        let l = arc(1);
        let atoms = l.atoms();
        let (u, w) = (atoms[0], atoms[1]);
        let f = Filter::principal(l.clone(), u);
        let ab = alpha_beta(&f).unwrap();
        assert_eq!((ab.alpha[u], ab.beta[u]), (u, u));
        assert_eq!((ab.alpha[l.one()], ab.beta[l.one()]), (l.one(), l.one()));
        // w = delta(1, u)
        assert_eq!((ab.alpha[w], ab.beta[w]), (l.one(), u));
    }

    #[test]
    fn presentation_on_ib1() {
        let l = arc(1);
        let atoms = l.atoms();
        let (u, w) = (atoms[0], atoms[1]);
        let f = Filter::principal(l.clone(), u);
        let p = presentation_from_gfilter(&f).unwrap();
        // members of F map to <1, f>-shaped pairs
        let top = p.interval.base().top();
        let (a, b) = p.interval.pair(p.map[u]);
        assert_eq!((a, b), (top, f.position(u).unwrap()));
        // w maps to <u, 1> in local coordinates
        let (a, b) = p.interval.pair(p.map[w]);
        assert_eq!((a, b), (f.position(u).unwrap(), top));
        for x in l.elements() {
            assert_eq!(p.inverse[p.map[x]], x);
        }
    }

    #[test]
    fn automorphism_swaps_vertices_on_ib1() {
        let l = arc(1);
        let atoms = l.atoms();
        let (u, w) = (atoms[0], atoms[1]);
        let fu = Filter::principal(l.clone(), u);
        let fw = Filter::principal(l.clone(), w);
        let id = filter_automorphism(&fu, &fu).unwrap();
        assert_eq!(id.map, l.elements().collect::<Vec<_>>());
        let phi = filter_automorphism(&fu, &fw).unwrap();
        assert_eq!(phi.apply(u), w);
        assert_eq!(phi.apply(w), u);
        assert_eq!(phi.apply(l.one()), l.one());
    }

    #[test]
    fn shift_examples() {
        let l = arc(1);
        let atoms = l.atoms();
        let (u, w) = (atoms[0], atoms[1]);
        let fu = Filter::principal(l.clone(), u);
        // F = [u,1], g = w: F_g = [w,1]
        assert_eq!(
            filter_shift(&fu, w).unwrap(),
            Filter::principal(l.clone(), w)
        );
        // g = 1: pointwise delta(1, .) image
        assert_eq!(
            filter_shift(&fu, l.one()).unwrap(),
            fu.delta1_image().unwrap()
        );
        // g in F: F n F_g = [g, 1]
        let fg = filter_shift(&fu, u).unwrap();
        assert_eq!(
            fu.intersect(&fg).unwrap(),
            Filter::principal(l.clone(), u)
        );
    }

    #[test]
    fn arrow_filter_examples() {
        let l = arc(2);
        let filters = enumerate_filters(&l).unwrap();
        for f in &filters {
            assert_eq!(arrow_filter(l.one(), f).unwrap(), *f);
        }
        // dual route on a spot instance
        let v = l.atoms()[0];
        let f = Filter::principal(l.clone(), v);
        for g in l.elements() {
            let direct = arrow_filter(g, &f).unwrap();
            let via = filter_shift(&f, g)
                .unwrap()
                .delta1_image()
                .unwrap()
                .intersect(&f)
                .unwrap();
            assert_eq!(direct, via, "g={g}");
        }
    }

    #[test]
    fn law_suites_pass_on_small_instances() {
        for n in 0..=2 {
            let l = arc(n);
            assert!(check_filter_base_laws(&l, &cfg()).unwrap().passed(), "base n={n}");
            assert!(check_distributivity(&l, &cfg()).unwrap().passed(), "distrib n={n}");
            assert!(check_alpha_beta_laws(&l, &cfg()).unwrap().passed(), "ab n={n}");
            assert!(check_presentation_laws(&l, &cfg()).unwrap().passed(), "pres n={n}");
            assert!(check_shift_laws(&l, &cfg()).unwrap().passed(), "shift n={n}");
        }
        // the imported table algebra goes through the same suites
        let l = Arc::new(instances::permuted_interval(2).unwrap());
        assert!(check_filter_base_laws(&l, &cfg()).unwrap().passed());
        assert!(check_distributivity(&l, &cfg()).unwrap().passed());
        assert!(check_shift_laws(&l, &cfg()).unwrap().passed());
    }

    #[test]
    fn filter_algebra_witnesses() {
        let l = arc(2);
        let (f, p) = is_filter_algebra(&l).unwrap().expect("interval algebras present");
        assert!(f.is_gfilter());
        assert_eq!(p.map.len(), l.size());

        let one = Arc::new(instances::one_element());
        assert!(is_filter_algebra(&one).unwrap().is_some());

        let crown = Arc::new(instances::crown());
        assert!(is_filter_algebra(&crown).unwrap().is_none());
    }
}
