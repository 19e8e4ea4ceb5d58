//! Monomials, monomial ideals, irreducible decomposition, Alexander duals,
//! and the edge/cover ideals of clutters and graphs.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set as a
//! sorted antichain under divisibility, so structural equality is ideal
//! equality. The zero ideal is the empty generator list; the unit ideal is
//! generated by 1.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::QMatrix;
use crate::rational::Rat;
use crate::Error;

/// A monomial t^a, stored as its exponent vector a ∈ N^s.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u64>,
}

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial { exponents }
    }

    /// The monomial 1 in s variables.
    pub fn one(s: usize) -> Self {
        Monomial {
            exponents: vec![0; s],
        }
    }

    /// Builds t_i^e (0-based i).
    pub fn pure_power(s: usize, i: usize, e: u64) -> Self {
        let mut exponents = vec![0; s];
        exponents[i] = e;
        Monomial { exponents }
    }

    /// Builds the squarefree monomial with the given support (0-based).
    pub fn squarefree(s: usize, support: &[usize]) -> Self {
        let mut exponents = vec![0; s];
        for &i in support {
            exponents[i] = 1;
        }
        Monomial { exponents }
    }

    pub fn vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.vars(), other.vars(), "monomial ambient mismatch");
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.vars(), other.vars(), "monomial ambient mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.vars(), other.vars(), "monomial ambient mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (e > 0).then_some(i))
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// `Some(i)` when the monomial is t_i^e with e ≥ 1 and no other variable.
    pub fn as_pure_power(&self) -> Option<usize> {
        let support = self.support();
        (support.len() == 1).then(|| support[0])
    }

    /// Exponents as a rational vector.
    pub fn to_rat_vec(&self) -> Vec<Rat> {
        self.exponents
            .iter()
            .map(|&e| Rat::from(e as i64))
            .collect()
    }

    /// Parses "t1^2*t3" (1-based variable indices) or "1".
    pub fn parse(s: &str, vars: usize) -> Result<Self, Error> {
        let s = s.trim();
        let bad =
            |msg: &str| Error::Invalid(format!("malformed monomial {s:?}: {msg}"));
        if s == "1" {
            return Ok(Monomial::one(vars));
        }
        let mut exponents = vec![0u64; vars];
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('t')
                .ok_or_else(|| bad("factors must look like t3 or t3^2"))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let idx: usize = idx.parse().map_err(|_| bad("bad variable index"))?;
            let exp: u64 = exp.parse().map_err(|_| bad("bad exponent"))?;
            if idx == 0 || idx > vars {
                return Err(bad(&format!(
                    "variable t{idx} out of range for {vars} variables"
                )));
            }
            exponents[idx - 1] += exp;
        }
        Ok(Monomial { exponents })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial ideal given by its minimal generators (a sorted antichain).
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Canonical constructor: keeps only divisibility-minimal monomials,
    /// de-duplicated and sorted. An empty input yields the zero ideal.
    pub fn minimalize(vars: usize, monomials: Vec<Monomial>) -> Result<Self, Error> {
        for m in &monomials {
            if m.vars() != vars {
                return Err(Error::DimensionMismatch(format!(
                    "monomial {m} has {} variables, ideal has {vars}",
                    m.vars()
                )));
            }
        }
        if monomials.iter().any(Monomial::is_one) {
            return Ok(MonomialIdeal {
                vars,
                gens: vec![Monomial::one(vars)],
            });
        }
        // A proper divisor has strictly smaller total degree, so sweeping the
        // candidates in degree order means every divisor of the current
        // monomial is already in `gens` (or is divisible by something that
        // is). This keeps the work at |input| * |antichain| instead of
        // |input|^2.
        let mut tagged: Vec<(u64, Monomial)> =
            monomials.into_iter().map(|m| (m.degree(), m)).collect();
        tagged.sort_unstable();
        tagged.dedup();
        let mut gens: Vec<Monomial> = Vec::new();
        for (_, m) in tagged {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        gens.sort_unstable();
        Ok(MonomialIdeal { vars, gens })
    }

    pub fn zero(vars: usize) -> Self {
        MonomialIdeal { vars, gens: vec![] }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            gens: vec![Monomial::one(vars)],
        }
    }

    /// Builds from raw exponent vectors, minimalizing.
    pub fn from_exponents(vars: usize, gens: &[&[u64]]) -> Result<Self, Error> {
        MonomialIdeal::minimalize(
            vars,
            gens.iter().map(|g| Monomial::new(g.to_vec())).collect(),
        )
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper and nonzero: the usual precondition of the polyhedral maps.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        assert_eq!(m.vars(), self.vars, "monomial ambient mismatch");
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        assert_eq!(other.vars, self.vars, "ideal ambient mismatch");
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::minimalize(self.vars, gens).expect("same ambient")
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(other.vars, self.vars, "ideal ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.vars);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::minimalize(self.vars, gens).expect("same ambient")
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(other.vars, self.vars, "ideal ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.vars);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        MonomialIdeal::minimalize(self.vars, gens).expect("same ambient")
    }

    /// I^n by repeated squaring with minimalization at every step.
    pub fn power(&self, n: u64) -> MonomialIdeal {
        assert!(n >= 1, "power requires n >= 1");
        let mut result: Option<MonomialIdeal> = None;
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = Some(match result {
                    Some(r) => r.multiply(&base),
                    None => base.clone(),
                });
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base);
            }
        }
        result.expect("n >= 1")
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.vars];
        for g in &self.gens {
            for i in g.support() {
                used[i] = true;
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| u.then_some(i))
            .collect()
    }

    /// Incidence matrix: s rows, one column per generator.
    pub fn incidence_matrix(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.vars, self.gens.len());
        for (j, g) in self.gens.iter().enumerate() {
            for (i, &e) in g.exponents().iter().enumerate() {
                m[(i, j)] = Rat::from(e as i64);
            }
        }
        m
    }

    /// Every generator a pure power of a variable (and the ideal proper,
    /// nonzero).
    pub fn is_irreducible(&self) -> bool {
        self.is_proper_nonzero() && self.gens.iter().all(|g| g.as_pure_power().is_some())
    }

    /// Primary test: writing R for the set of variables that appear as a pure
    /// power among the generators, the ideal is primary iff every generator
    /// is supported inside R.
    pub fn is_primary(&self) -> bool {
        if !self.is_proper_nonzero() {
            return false;
        }
        let mut pure = vec![false; self.vars];
        for g in &self.gens {
            if let Some(i) = g.as_pure_power() {
                pure[i] = true;
            }
        }
        self.gens
            .iter()
            .all(|g| g.support().into_iter().all(|i| pure[i]))
    }

    /// The unique irredundant irreducible decomposition, components in
    /// lexicographic order on their exponent vectors.
    pub fn irreducible_decomposition(&self) -> Result<Vec<IrreducibleComponent>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut leaves: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(ideal) = stack.pop() {
            match ideal
                .gens
                .iter()
                .find(|g| g.support().len() >= 2)
                .cloned()
            {
                Some(mixed) => {
                    // Split off the first variable of a mixed generator:
                    // I = (I + (t_i^{a_i})) ∩ (I + (t^{a - a_i e_i})).
                    let i = mixed.support()[0];
                    let a_i = mixed.exponents()[i];
                    let left = Monomial::pure_power(self.vars, i, a_i);
                    let mut rest = mixed.exponents().to_vec();
                    rest[i] = 0;
                    let right = Monomial::new(rest);
                    let single = |m: Monomial| MonomialIdeal {
                        vars: self.vars,
                        gens: vec![m],
                    };
                    stack.push(ideal.sum(&single(left)));
                    stack.push(ideal.sum(&single(right)));
                }
                None => {
                    // All pure powers: at most one generator per variable.
                    let mut alpha = vec![0u64; self.vars];
                    for g in &ideal.gens {
                        let i = g.as_pure_power().expect("pure power leaf");
                        alpha[i] = g.exponents()[i];
                    }
                    leaves.insert(alpha);
                }
            }
        }
        let mut components: Vec<IrreducibleComponent> = leaves
            .into_iter()
            .map(|alpha| IrreducibleComponent { alpha })
            .collect();
        // Drop redundant components until the list is irredundant; the
        // irredundant irreducible decomposition is unique, so greedy removal
        // converges to it regardless of order.
        'again: loop {
            for drop in 0..components.len() {
                if components.len() == 1 {
                    break;
                }
                let rest = components
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, c)| c.ideal(self.vars))
                    .reduce(|a, b| a.intersect(&b))
                    .expect("at least one component");
                if rest == *self {
                    components.remove(drop);
                    continue 'again;
                }
            }
            break;
        }
        Ok(components)
    }

    /// Alexander dual of a squarefree ideal: the ideal of minimal transversals
    /// (minimal vertex covers) of its clutter.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal, Error> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let edges: Vec<Vec<usize>> = self.gens.iter().map(Monomial::support).collect();
        let transversals = minimal_transversals(self.vars, &edges)?;
        MonomialIdeal::minimalize(
            self.vars,
            transversals
                .iter()
                .map(|t| Monomial::squarefree(self.vars, t))
                .collect(),
        )
    }

    /// The clutter whose edges are the generator supports (squarefree only).
    pub fn clutter(&self) -> Result<Clutter, Error> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        Clutter::new(
            self.vars,
            self.gens.iter().map(Monomial::support).collect(),
        )
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            vars: usize,
            gens: Vec<&'a [u64]>,
        }
        Repr {
            vars: self.vars,
            gens: self.gens.iter().map(Monomial::exponents).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum GenRepr {
            Exponents(Vec<u64>),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Repr {
            vars: usize,
            gens: Vec<GenRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let gens = repr
            .gens
            .into_iter()
            .map(|g| match g {
                GenRepr::Exponents(e) => {
                    if e.len() == repr.vars {
                        Ok(Monomial::new(e))
                    } else {
                        Err(D::Error::custom(format!(
                            "generator has {} exponents, expected {}",
                            e.len(),
                            repr.vars
                        )))
                    }
                }
                GenRepr::Text(s) => {
                    Monomial::parse(&s, repr.vars).map_err(D::Error::custom)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        MonomialIdeal::minimalize(repr.vars, gens).map_err(D::Error::custom)
    }
}

/// One irreducible component q_α = ({t_i^{α_i} : α_i ≥ 1}).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    alpha: Vec<u64>,
}

impl IrreducibleComponent {
    pub fn new(alpha: Vec<u64>) -> Result<Self, Error> {
        if alpha.iter().all(|&a| a == 0) {
            return Err(Error::Invalid(
                "irreducible component needs a positive exponent".into(),
            ));
        }
        Ok(IrreducibleComponent { alpha })
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn ideal(&self, vars: usize) -> MonomialIdeal {
        assert_eq!(vars, self.alpha.len(), "component ambient mismatch");
        MonomialIdeal {
            vars,
            gens: self
                .alpha
                .iter()
                .enumerate()
                .filter(|&(_, &a)| a > 0)
                .map(|(i, &a)| Monomial::pure_power(vars, i, a))
                .collect(),
        }
    }

    /// α^{-1}: reciprocal on the support, 0 elsewhere.
    pub fn reciprocal(&self) -> Vec<Rat> {
        self.alpha
            .iter()
            .map(|&a| {
                if a == 0 {
                    Rat::zero()
                } else {
                    Rat::new(1, a as i64)
                }
            })
            .collect()
    }

    /// The radical's support (variables appearing in the component).
    pub fn support(&self) -> Vec<usize> {
        self.alpha
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| (a > 0).then_some(i))
            .collect()
    }
}

/// Minimal transversals (hitting sets) of an edge family, by sequential
/// insertion with minimalization — exponential in the worst case but fine at
/// the intended scale (s ≤ ~20).
fn minimal_transversals(
    vertices: usize,
    edges: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>, Error> {
    const TRANSVERSAL_LIMIT: usize = 20;
    if vertices > TRANSVERSAL_LIMIT.max(crate::max_dim()) {
        return Err(Error::SizeGuard {
            what: "transversal enumeration vertex count",
            got: vertices,
            limit: TRANSVERSAL_LIMIT.max(crate::max_dim()),
        });
    }
    if edges.iter().any(Vec::is_empty) {
        return Err(Error::Invalid("clutter edge is empty".into()));
    }
    let to_mask = |set: &[usize]| -> u64 { set.iter().fold(0u64, |m, &v| m | (1 << v)) };
    let mut partial: Vec<u64> = vec![0];
    for edge in edges {
        let edge_mask = to_mask(edge);
        let mut next: Vec<u64> = Vec::new();
        for &t in &partial {
            if t & edge_mask != 0 {
                next.push(t);
            } else {
                for &v in edge {
                    next.push(t | (1 << v));
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        // Keep only inclusion-minimal partial transversals.
        let minimal: Vec<u64> = next
            .iter()
            .filter(|&&t| !next.iter().any(|&o| o != t && o & t == o))
            .copied()
            .collect();
        partial = minimal;
    }
    let mut out: Vec<Vec<usize>> = partial
        .into_iter()
        .map(|mask| (0..vertices).filter(|&v| mask & (1 << v) != 0).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// A clutter: vertex set {1..s} and an antichain of nonempty edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clutter {
    vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl Clutter {
    pub fn new(vertices: usize, mut edges: Vec<Vec<usize>>) -> Result<Self, Error> {
        for e in edges.iter_mut() {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::Invalid("clutter edge is empty".into()));
            }
            if e.iter().any(|&v| v >= vertices) {
                return Err(Error::Invalid(format!(
                    "edge vertex out of range (have {vertices} vertices)"
                )));
            }
        }
        edges.sort();
        edges.dedup();
        let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|v| b.contains(v));
        if edges
            .iter()
            .any(|e| edges.iter().any(|o| o != e && is_subset(o, e)))
        {
            return Err(Error::Invalid(
                "clutter edges must form an antichain".into(),
            ));
        }
        Ok(Clutter { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Edge ideal I(C) = ({ t_e : e ∈ E(C) }).
    pub fn edge_ideal(&self) -> Result<MonomialIdeal, Error> {
        if self.edges.is_empty() {
            return Err(Error::Invalid("clutter has no edges".into()));
        }
        MonomialIdeal::minimalize(
            self.vertices,
            self.edges
                .iter()
                .map(|e| Monomial::squarefree(self.vertices, e))
                .collect(),
        )
    }

    /// Ideal of covers I_c(C) = Alexander dual of the edge ideal.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal, Error> {
        self.edge_ideal()?.alexander_dual()
    }
}

/// A finite simple graph on vertices {0..n-1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<u64>,
}

impl Graph {
    /// Builds from 0-based endpoint pairs.
    pub fn new(vertices: usize, raw_edges: &[(usize, usize)]) -> Result<Self, Error> {
        if vertices > 64 {
            return Err(Error::SizeGuard {
                what: "graph vertex count",
                got: vertices,
                limit: 64,
            });
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        let mut adjacency = vec![0u64; vertices];
        for &(a, b) in raw_edges {
            if a >= vertices || b >= vertices {
                return Err(Error::Invalid(format!(
                    "edge ({a},{b}) out of range for {vertices} vertices"
                )));
            }
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if adjacency[e.0] & (1 << e.1) == 0 {
                edges.push(e);
                adjacency[e.0] |= 1 << e.1;
                adjacency[e.1] |= 1 << e.0;
            }
        }
        edges.sort_unstable();
        Ok(Graph {
            vertices,
            edges,
            adjacency,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adjacency[a] & (1 << b) != 0
    }

    /// Neighbourhood of v as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for a in 0..self.vertices {
            for b in a + 1..self.vertices {
                if !self.has_edge(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(self.vertices, &edges).expect("complement is simple")
    }

    /// Induced subgraph on the 1-bits of `mask`, vertices relabelled in
    /// increasing order. Returns the vertex map alongside.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = (0..self.vertices)
            .filter(|&v| mask & (1 << v) != 0)
            .collect();
        let index_of = |v: usize| verts.iter().position(|&w| w == v).unwrap();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| mask & (1 << a) != 0 && mask & (1 << b) != 0)
            .map(|&(a, b)| (index_of(a), index_of(b)))
            .collect();
        (
            Graph::new(verts.len(), &edges).expect("induced subgraph is simple"),
            verts,
        )
    }

    pub fn clutter(&self) -> Result<Clutter, Error> {
        Clutter::new(
            self.vertices,
            self.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        )
    }

    pub fn edge_ideal(&self) -> Result<MonomialIdeal, Error> {
        self.clutter()?.edge_ideal()
    }

    pub fn cover_ideal(&self) -> Result<MonomialIdeal, Error> {
        self.clutter()?.cover_ideal()
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            vertices: usize,
            edges: Vec<[usize; 2]>,
        }
        Repr {
            vertices: self.vertices,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| [a + 1, b + 1])
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            vertices: usize,
            edges: Vec<[usize; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let edges: Vec<(usize, usize)> = repr
            .edges
            .iter()
            .map(|&[a, b]| {
                if a == 0 || b == 0 {
                    Err(D::Error::custom("graph vertices are 1-based"))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<_, _>>()?;
        Graph::new(repr.vertices, &edges).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ideal(vars: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(vars, gens).unwrap()
    }

    #[test]
    fn minimalize_keeps_the_antichain() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 1, 1]]);
        assert_eq!(i.gens().len(), 1);
        assert_eq!(i.gens()[0], Monomial::new(vec![1, 1, 0]));
        // Already-minimal sets come through unchanged.
        let eleven = ideal(
            3,
            &[
                &[2, 0, 0],
                &[0, 5, 0],
                &[0, 0, 11],
                &[0, 1, 9],
                &[0, 2, 7],
                &[0, 3, 5],
                &[0, 4, 3],
                &[1, 0, 6],
                &[1, 1, 4],
                &[1, 2, 2],
                &[1, 3, 0],
            ],
        );
        assert_eq!(eleven.gens().len(), 11);
    }

    #[test]
    fn monomial_strings_round_trip() {
        let m = Monomial::parse("t1^2*t3", 3).unwrap();
        assert_eq!(m.exponents(), &[2, 0, 1]);
        assert_eq!(m.to_string(), "t1^2*t3");
        assert_eq!(Monomial::parse("1", 2).unwrap(), Monomial::one(2));
        assert!(Monomial::parse("t4", 3).is_err());
        assert!(Monomial::parse("x1", 3).is_err());
    }

    #[test]
    fn intersection_of_components_is_the_ideal() {
        // (t2^2,t3^2) ∩ (t1,t3^2) ∩ (t1,t2) = (t1t2^2, t2t3^2, t1t3^2).
        let a = ideal(3, &[&[0, 2, 0], &[0, 0, 2]]);
        let b = ideal(3, &[&[1, 0, 0], &[0, 0, 2]]);
        let c = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let i = a.intersect(&b).intersect(&c);
        assert_eq!(i, ideal(3, &[&[1, 2, 0], &[0, 1, 2], &[1, 0, 2]]));
        // I ∩ (1) = I.
        assert_eq!(i.intersect(&MonomialIdeal::unit(3)), i);
    }

    #[test]
    fn four_variable_intersection_example() {
        let comps: [&[&[u64]]; 4] = [
            &[&[0, 1, 0, 0], &[0, 0, 1, 0]],
            &[&[0, 1, 0, 0], &[0, 0, 0, 2]],
            &[&[1, 0, 0, 0], &[0, 0, 1, 0]],
            &[&[1, 0, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 3]],
        ];
        let i = comps
            .iter()
            .map(|c| ideal(4, c))
            .reduce(|a, b| a.intersect(&b))
            .unwrap();
        let expected = ideal(
            4,
            &[
                &[1, 1, 0, 0],
                &[0, 0, 1, 3],
                &[1, 0, 1, 2],
                &[0, 1, 3, 0],
                &[0, 0, 3, 2],
            ],
        );
        assert_eq!(i, expected);
    }

    #[test]
    fn powers_and_products() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.power(2), ideal(2, &[&[2, 2]]));
        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(
            j.power(3),
            j.multiply(&j).multiply(&j),
            "repeated squaring equals iterated products"
        );
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[1, 1]]);
        assert!(i.contains_monomial(&Monomial::new(vec![2, 1])));
        assert!(!i.contains_monomial(&Monomial::new(vec![2, 0])));
        assert!(i.contains_ideal(&ideal(2, &[&[1, 2], &[3, 1]])));
    }

    #[test]
    fn decomposition_of_three_variable_example() {
        let i = ideal(3, &[&[1, 2, 0], &[0, 1, 2], &[1, 0, 2]]);
        let comps = i.irreducible_decomposition().unwrap();
        let alphas: Vec<&[u64]> = comps.iter().map(|c| c.alpha()).collect();
        assert_eq!(
            alphas,
            vec![&[0, 2, 2][..], &[1, 0, 2][..], &[1, 1, 0][..]]
        );
        // Intersecting the components recovers the ideal.
        let back = comps
            .iter()
            .map(|c| c.ideal(3))
            .reduce(|a, b| a.intersect(&b))
            .unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn decomposition_of_four_variable_example() {
        let i = ideal(
            4,
            &[
                &[1, 1, 0, 0],
                &[0, 0, 1, 3],
                &[1, 0, 1, 2],
                &[0, 1, 3, 0],
                &[0, 0, 3, 2],
            ],
        );
        let comps = i.irreducible_decomposition().unwrap();
        let alphas: Vec<&[u64]> = comps.iter().map(|c| c.alpha()).collect();
        assert_eq!(
            alphas,
            vec![
                &[0, 1, 0, 2][..],
                &[0, 1, 1, 0][..],
                &[1, 0, 1, 0][..],
                &[1, 0, 3, 3][..],
            ]
        );
    }

    #[test]
    fn decomposition_of_irreducible_ideal_is_itself() {
        let q = ideal(2, &[&[3, 0], &[0, 1]]);
        let comps = q.irreducible_decomposition().unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].alpha(), &[3, 1]);
        assert!(q.is_irreducible());
        assert!(q.is_primary());
    }

    #[test]
    fn primary_and_irreducible_flags() {
        // Pure powers plus mixed monomials inside the same variable set.
        let i1 = ideal(
            3,
            &[
                &[2, 0, 0],
                &[0, 5, 0],
                &[0, 0, 11],
                &[0, 1, 9],
                &[0, 2, 7],
                &[0, 3, 5],
                &[0, 4, 3],
                &[1, 0, 6],
                &[1, 1, 4],
                &[1, 2, 2],
                &[1, 3, 0],
            ],
        );
        assert!(i1.is_primary());
        assert!(!i1.is_irreducible());
        assert!(!ideal(2, &[&[1, 1]]).is_primary());
    }

    #[test]
    fn alexander_dual_round_trips() {
        let k3 = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(k3.alexander_dual().unwrap(), k3, "K3 is self-dual");
        let path = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let dual = path.alexander_dual().unwrap();
        assert_eq!(dual, ideal(3, &[&[0, 1, 0], &[1, 0, 1]]));
        assert_eq!(dual.alexander_dual().unwrap(), path);
        let principal = ideal(1, &[&[1]]);
        assert_eq!(principal.alexander_dual().unwrap(), principal);
        assert!(ideal(2, &[&[2, 0]]).alexander_dual().is_err());
    }

    #[test]
    fn squarefree_components_match_dual_generators() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let duals: BTreeSet<Vec<u64>> = i
            .alexander_dual()
            .unwrap()
            .gens()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect();
        let comps: BTreeSet<Vec<u64>> = i
            .irreducible_decomposition()
            .unwrap()
            .iter()
            .map(|c| c.alpha().to_vec())
            .collect();
        assert_eq!(duals, comps);
    }

    #[test]
    fn graph_ideals() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let edge = k3.edge_ideal().unwrap();
        assert_eq!(edge, ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]));
        assert_eq!(k3.cover_ideal().unwrap(), edge);
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            path.cover_ideal().unwrap(),
            ideal(3, &[&[0, 1, 0], &[1, 0, 1]])
        );
    }

    #[test]
    fn graph_json_is_one_based() {
        let g: Graph =
            serde_json::from_str(r#"{"vertices":3,"edges":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let text = serde_json::to_string(&g).unwrap();
        assert!(text.contains("[1,2]"), "{text}");
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":2,"edges":[[0,1]]}"#).is_err());
    }

    #[test]
    fn ideal_json_accepts_strings_and_arrays() {
        let i: MonomialIdeal =
            serde_json::from_str(r#"{"vars":3,"gens":[[1,2,0],"t2*t3^2","t1*t3^2"]}"#)
                .unwrap();
        assert_eq!(i, ideal(3, &[&[1, 2, 0], &[0, 1, 2], &[1, 0, 2]]));
        let text = serde_json::to_value(&i).unwrap();
        assert_eq!(text["vars"], 3);
        assert_eq!(text["gens"][0], serde_json::json!([0, 1, 2]));
    }

    #[test]
    fn clutter_validation() {
        assert!(Clutter::new(3, vec![vec![0, 1], vec![0]]).is_err(), "not an antichain");
        assert!(Clutter::new(3, vec![vec![]]).is_err(), "empty edge");
        assert!(Clutter::new(2, vec![vec![0, 5]]).is_err(), "out of range");
    }
}
