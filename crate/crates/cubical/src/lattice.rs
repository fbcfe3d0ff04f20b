//! Finite Boolean algebras and implication lattices: the ground layer every
//! other construction builds on.
//!
//! Two carriers live behind [`BooleanAlgebra`]: the powerset algebra on `n`
//! atoms (element id = atom bitmask, so id 0 is bottom and id 2^n - 1 is
//! top), and table-backed algebras produced by constructions such as the
//! enveloping algebra of an implication lattice. Table-backed carriers are
//! always run through [`BooleanAlgebra::verify`] — the tables themselves are
//! content under test, not trusted input.

use crate::error::{Error, Result};

/// Dense element id within one algebra. Ids are only meaningful relative to
/// the carrier that issued them.
pub type Elem = usize;

/// Largest supported atom count for powerset construction. Downstream
/// filter-pair enumeration is exponential, so the cap is deliberate; the
/// contract only requires it to be at least 4.
pub const MAX_ATOMS: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// Powerset of `atom_count` atoms; ops are bitwise.
    Powerset,
    /// Explicit operation tables, e.g. the enveloping algebra `B_F`.
    Table {
        join: Vec<Vec<Elem>>,
        meet: Vec<Vec<Elem>>,
        comp: Vec<Elem>,
        zero: Elem,
        one: Elem,
    },
}

/// A finite Boolean algebra with dense element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanAlgebra {
    atom_count: u32,
    size: usize,
    repr: Repr,
}

impl BooleanAlgebra {
    /// The full powerset algebra on `n` atoms. Bit `i` of an element id is
    /// atom `i`, which makes serialized algebras bit-exact reproducible.
    pub fn powerset(n: u32) -> Result<Self> {
        if n > MAX_ATOMS {
            return Err(Error::Size(format!(
                "atom count {n} exceeds cap {MAX_ATOMS}"
            )));
        }
        Ok(BooleanAlgebra {
            atom_count: n,
            size: 1usize << n,
            repr: Repr::Powerset,
        })
    }

    /// A table-backed algebra, verified against the full Boolean-law suite.
    /// Fails with a falsification error if the tables are not Boolean.
    pub fn from_tables(
        join: Vec<Vec<Elem>>,
        meet: Vec<Vec<Elem>>,
        comp: Vec<Elem>,
        zero: Elem,
        one: Elem,
    ) -> Result<Self> {
        let size = comp.len();
        if join.len() != size || meet.len() != size {
            return Err(Error::Structure("op tables disagree on carrier size".into()));
        }
        for row in join.iter().chain(meet.iter()) {
            if row.len() != size || row.iter().any(|&v| v >= size) {
                return Err(Error::Structure("ragged or out-of-range op table".into()));
            }
        }
        if comp.iter().any(|&v| v >= size) || zero >= size || one >= size {
            return Err(Error::Structure("out-of-range element id".into()));
        }
        let mut ba = BooleanAlgebra {
            atom_count: 0,
            size,
            repr: Repr::Table {
                join,
                meet,
                comp,
                zero,
                one,
            },
        };
        ba.atom_count = ba.atoms().len() as u32;
        ba.verify()?;
        Ok(ba)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn atom_count(&self) -> u32 {
        self.atom_count
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size
    }

    pub fn zero(&self) -> Elem {
        match &self.repr {
            Repr::Powerset => 0,
            Repr::Table { zero, .. } => *zero,
        }
    }

    pub fn one(&self) -> Elem {
        match &self.repr {
            Repr::Powerset => self.size - 1,
            Repr::Table { one, .. } => *one,
        }
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Powerset => a | b,
            Repr::Table { join, .. } => join[a][b],
        }
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Powerset => a & b,
            Repr::Table { meet, .. } => meet[a][b],
        }
    }

    pub fn complement(&self, a: Elem) -> Elem {
        match &self.repr {
            Repr::Powerset => a ^ (self.size - 1),
            Repr::Table { comp, .. } => comp[a],
        }
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.join(a, b) == b
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<Elem> {
        let zero = self.zero();
        self.elements()
            .filter(|&a| {
                a != zero
                    && self
                        .elements()
                        .all(|z| !(self.leq(z, a) && z != a && z != zero))
            })
            .collect()
    }

    /// Exhaustively checks the Boolean-algebra laws: lattice laws,
    /// distributivity, complementation, bounds, and `size = 2^atoms`.
    pub fn verify(&self) -> Result<()> {
        let n = self.size;
        let fail = |law: &str, detail: String| Err(Error::falsified(law, detail));
        let (zero, one) = (self.zero(), self.one());
        for a in 0..n {
            if self.join(a, a) != a || self.meet(a, a) != a {
                return fail("idempotence", format!("a={a}"));
            }
            if self.join(a, zero) != a || self.meet(a, one) != a {
                return fail("bounds", format!("a={a}"));
            }
            if self.join(a, self.complement(a)) != one {
                return fail("complement_join", format!("a={a}"));
            }
            if self.meet(a, self.complement(a)) != zero {
                return fail("complement_meet", format!("a={a}"));
            }
            for b in 0..n {
                if self.join(a, b) != self.join(b, a) || self.meet(a, b) != self.meet(b, a) {
                    return fail("commutativity", format!("a={a} b={b}"));
                }
                if self.join(a, self.meet(a, b)) != a || self.meet(a, self.join(a, b)) != a {
                    return fail("absorption", format!("a={a} b={b}"));
                }
                for c in 0..n {
                    if self.join(a, self.join(b, c)) != self.join(self.join(a, b), c)
                        || self.meet(a, self.meet(b, c)) != self.meet(self.meet(a, b), c)
                    {
                        return fail("associativity", format!("a={a} b={b} c={c}"));
                    }
                    if self.meet(a, self.join(b, c))
                        != self.join(self.meet(a, b), self.meet(a, c))
                    {
                        return fail("distributivity", format!("a={a} b={b} c={c}"));
                    }
                }
            }
        }
        if n != 1usize << self.atom_count {
            return fail(
                "atomicity",
                format!("size {n} != 2^{}", self.atom_count),
            );
        }
        Ok(())
    }
}

/// A finite implication lattice. In the finite case a bottomed implication
/// lattice is a Boolean algebra, so the carrier is one, viewed through its
/// relative-implication operation `a -> b = comp(a) v b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationLattice {
    base: BooleanAlgebra,
}

impl ImplicationLattice {
    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn base(&self) -> &BooleanAlgebra {
        &self.base
    }

    pub fn top(&self) -> Elem {
        self.base.one()
    }

    pub fn bottom(&self) -> Elem {
        self.base.zero()
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.base.join(a, b)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.base.meet(a, b)
    }

    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.base.join(self.base.complement(a), b)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.base.leq(a, b)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        self.base.elements()
    }
}

impl From<BooleanAlgebra> for ImplicationLattice {
    fn from(base: BooleanAlgebra) -> Self {
        ImplicationLattice { base }
    }
}

impl BooleanAlgebra {
    /// Same carrier with `imp(a, b) = complement(a) v b`; top preserved.
    pub fn as_implication_lattice(self) -> ImplicationLattice {
        ImplicationLattice { base: self }
    }
}

/// A nonempty up-closed meet-closed subset of a lattice. Finite lattices
/// only have principal filters, so each carries its generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFilter {
    pub members: Vec<Elem>,
    pub generator: Elem,
    pub is_ultrafilter: bool,
}

/// All filters of a finite implication lattice, one per principal generator.
/// For small carriers the principality assumption itself is guarded by an
/// exhaustive subset scan.
pub fn enumerate_lattice_filters(lat: &ImplicationLattice) -> Result<Vec<LatticeFilter>> {
    let filters: Vec<LatticeFilter> = lat
        .elements()
        .map(|g| {
            let members: Vec<Elem> = lat.elements().filter(|&x| lat.leq(g, x)).collect();
            let ultra = lat
                .elements()
                .all(|x| members.contains(&x) != members.contains(&lat.base.complement(x)));
            LatticeFilter {
                members,
                generator: g,
                is_ultrafilter: ultra,
            }
        })
        .collect();
    if lat.size() <= 9 {
        let scanned = scan_lattice_filters(lat);
        let mut principal: Vec<Vec<Elem>> = filters.iter().map(|f| f.members.clone()).collect();
        principal.sort();
        if principal != scanned {
            return Err(Error::falsified(
                "principal_filters",
                "subset scan found a non-principal filter",
            ));
        }
    }
    Ok(filters)
}

/// Exhaustive subset scan for filters; quadratic per subset, only usable on
/// small carriers. Serves as the guard oracle for the principal enumeration.
pub fn scan_lattice_filters(lat: &ImplicationLattice) -> Vec<Vec<Elem>> {
    let n = lat.size();
    assert!(n <= 20, "subset scan is exponential");
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<Elem> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let up_closed = members
            .iter()
            .all(|&f| (0..n).all(|x| !lat.leq(f, x) || members.contains(&x)));
        let meet_closed = members
            .iter()
            .all(|&f| members.iter().all(|&g| members.contains(&lat.meet(f, g))));
        if up_closed && meet_closed {
            out.push(members);
        }
    }
    out.sort();
    out
}
