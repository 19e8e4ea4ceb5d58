//! Hilbert bases of pointed rational cones and the machinery built on them:
//! minimal algebra generators of filtration Rees algebras, the graded pieces
//! `I_n` of a polyhedral filtration, integral closures of powers, symbolic
//! powers, normality certificates, the max-flow min-cut test for clutters,
//! and Waldschmidt periods.
//!
//! The Hilbert basis is computed by triangulating the cone into simplicial
//! subcones on its extreme rays, enumerating the lattice points of each
//! fundamental half-open parallelepiped through a Hermite-form coset walk,
//! and then discarding every candidate that splits as a sum of two nonzero
//! lattice points of the cone.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{OnceLock, RwLock};

use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::exec;
use crate::ideals::{Clutter, Monomial, MonomialIdeal};
use crate::linalg::{make_primitive, QMatrix};
use crate::polyhedra::{
    covering_polyhedron, irreducible_polyhedron, newton_polyhedron, rees_cone, simis_cone,
    symbolic_polyhedron, CoveringPolyhedron, IntCone,
};
use crate::rational::{Int, Rat};
use crate::{lp, Error};

/// Cap on the number of extreme-ray subsets examined while triangulating a
/// cone for its Hilbert basis.
const TRIANGULATION_BUDGET: u128 = 2_000_000;

/// Cap on the lattice-point count of a single fundamental parallelepiped.
const PARALLELEPIPED_BUDGET: u128 = 4_000_000;

/// Cap on the number of search-tree nodes visited while enumerating the
/// minimal generators of one graded piece of a filtration.
const ENUMERATION_BUDGET: u64 = 20_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// The unique minimal generating set of the additive semigroup of lattice
/// points of a pointed rational cone.
///
/// Every element is a nonzero lattice point of the cone that is not the sum
/// of two nonzero lattice points of the cone, and together the elements
/// generate every lattice point of the cone under addition. Elements are
/// stored sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertBasis {
    pub elements: Vec<Vec<Int>>,
}

impl HilbertBasis {
    /// Number of basis elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements whose last coordinate equals `degree`, with that coordinate
    /// stripped. For cones over a polyhedron this is the slice of basis
    /// elements sitting at a fixed level.
    pub fn level_slice(&self, degree: u64) -> Vec<Vec<Int>> {
        let d = Int::from(degree);
        self.elements
            .iter()
            .filter(|e| *e.last().expect("nonempty element") == d)
            .map(|e| e[..e.len() - 1].to_vec())
            .collect()
    }
}

fn rank_of_int_rows(rows: &[Vec<Int>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let qrows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|e| Rat::from_int(e.clone())).collect())
        .collect();
    match QMatrix::from_rows(qrows) {
        Ok(m) => m.rank(),
        Err(_) => 0,
    }
}

/// Primitive representatives of the extreme rays of `cone`, deduplicated and
/// sorted. A generator lies on an extreme ray exactly when its binding facet
/// normals span a hyperplane.
fn extreme_generators(cone: &IntCone) -> Vec<Vec<Int>> {
    let mut primitive: BTreeSet<Vec<Int>> = BTreeSet::new();
    for g in &cone.generators {
        if g.iter().all(|e| e.is_zero()) {
            continue;
        }
        let mut v = g.clone();
        make_primitive(&mut v);
        primitive.insert(v);
    }
    let all: Vec<Vec<Int>> = primitive.into_iter().collect();
    if cone.facets.is_empty() {
        return all;
    }
    let extreme: Vec<Vec<Int>> = all
        .iter()
        .filter(|g| {
            let binding: Vec<Vec<Int>> = cone
                .binding_facets(g)
                .into_iter()
                .map(|i| cone.facets[i].clone())
                .collect();
            rank_of_int_rows(&binding) + 1 >= cone.dim
        })
        .cloned()
        .collect();
    // The facet description is complete for every cone built in this crate,
    // so the extreme rays regenerate the cone; fall back to the full set if
    // the filter degenerates.
    if rank_of_int_rows(&extreme) == rank_of_int_rows(&all) {
        extreme
    } else {
        all
    }
}

/// Column-style Hermite normal form of a nonsingular square integer matrix:
/// returns a lower-triangular matrix with positive diagonal obtained from
/// the input by unimodular column operations.
fn column_hermite_form(mut m: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let d = m.len();
    let sub_col = |m: &mut Vec<Vec<Int>>, target: usize, source: usize, q: &Int| {
        for row in m.iter_mut() {
            let delta = q * &row[source];
            row[target] -= delta;
        }
    };
    for i in 0..d {
        loop {
            let nonzero: Vec<usize> = (i..d).filter(|&j| !m[i][j].is_zero()).collect();
            let pivot = *nonzero
                .iter()
                .min_by_key(|&&j| m[i][j].abs())
                .expect("nonsingular matrix has a pivot in every row");
            if nonzero.len() == 1 {
                if pivot != i {
                    for row in m.iter_mut() {
                        row.swap(pivot, i);
                    }
                }
                break;
            }
            for &j in &nonzero {
                if j == pivot {
                    continue;
                }
                let q = &m[i][j] / &m[i][pivot];
                sub_col(&mut m, j, pivot, &q);
            }
        }
        if m[i][i].is_negative() {
            for row in m.iter_mut() {
                row[i] = -row[i].clone();
            }
        }
    }
    m
}

/// Lattice points of the half-open parallelepiped spanned by `cols`
/// (linearly independent integer vectors), excluding the origin.
///
/// The points are recovered by walking coset representatives of the lattice
/// generated by the columns: restrict to an independent set of coordinate
/// rows, put that square block in Hermite form, and scan the diagonal box,
/// keeping the combinations whose full coordinate vector is integral.
fn parallelepiped_points(cols: &[Vec<Int>]) -> Result<Vec<Vec<Int>>, Error> {
    let r = cols.len();
    let d = cols[0].len();
    // Select r linearly independent rows of the d-by-r column matrix.
    let mut pivot_rows: Vec<usize> = Vec::with_capacity(r);
    {
        let mut work: Vec<Vec<Rat>> = (0..d)
            .map(|k| (0..r).map(|j| Rat::from_int(cols[j][k].clone())).collect())
            .collect();
        let mut used = vec![false; d];
        for col in 0..r {
            let Some(p) = (0..d).find(|&k| !used[k] && !work[k][col].is_zero()) else {
                return Err(Error::Inconsistent(
                    "dependent columns passed to parallelepiped enumeration".into(),
                ));
            };
            used[p] = true;
            pivot_rows.push(p);
            for k in 0..d {
                if k != p && !work[k][col].is_zero() {
                    let factor = work[k][col].clone() / work[p][col].clone();
                    for j in col..r {
                        let delta = factor.clone() * work[p][j].clone();
                        work[k][j] = work[k][j].clone() - delta;
                    }
                }
            }
        }
        pivot_rows.sort_unstable();
    }
    let block: Vec<Vec<Int>> = pivot_rows
        .iter()
        .map(|&k| (0..r).map(|j| cols[j][k].clone()).collect())
        .collect();
    let hermite = column_hermite_form(block.clone());
    let mut box_dims: Vec<u64> = Vec::with_capacity(r);
    let mut volume: u128 = 1;
    for (i, row) in hermite.iter().enumerate() {
        let h = row[i].to_u64().ok_or(Error::SizeGuard {
            what: "parallelepiped lattice volume",
            got: usize::MAX,
            limit: PARALLELEPIPED_BUDGET as usize,
        })?;
        volume = volume.saturating_mul(h as u128);
        box_dims.push(h);
    }
    if volume > PARALLELEPIPED_BUDGET {
        return Err(Error::SizeGuard {
            what: "parallelepiped lattice volume",
            got: volume.min(usize::MAX as u128) as usize,
            limit: PARALLELEPIPED_BUDGET as usize,
        });
    }
    let block_q: Vec<Vec<Rat>> = block
        .iter()
        .map(|row| row.iter().map(|e| Rat::from_int(e.clone())).collect())
        .collect();
    let inverse = QMatrix::from_rows(block_q)?
        .inverse()
        .ok_or_else(|| Error::Inconsistent("singular pivot block in coset walk".into()))?;
    let mut points = Vec::new();
    let mut digits = vec![0u64; r];
    loop {
        if digits.iter().any(|&y| y > 0) {
            let y: Vec<Rat> = digits.iter().map(|&v| Rat::from_int(Int::from(v))).collect();
            let lambda = inverse.mul_vec(&y);
            let frac: Vec<Rat> = lambda
                .iter()
                .map(|l| l.clone() - Rat::from_int(l.floor()))
                .collect();
            if frac.iter().any(|f| !f.is_zero()) {
                let mut x: Vec<Rat> = vec![Rat::zero(); d];
                for (j, f) in frac.iter().enumerate() {
                    if f.is_zero() {
                        continue;
                    }
                    for k in 0..d {
                        x[k] = x[k].clone() + f.clone() * Rat::from_int(cols[j][k].clone());
                    }
                }
                if x.iter().all(|c| c.is_integer()) {
                    points.push(x.into_iter().map(|c| c.floor()).collect::<Vec<Int>>());
                }
            }
        }
        // Odometer step over the diagonal box.
        let mut carry = true;
        for i in 0..r {
            if !carry {
                break;
            }
            digits[i] += 1;
            if digits[i] < box_dims[i].max(1) {
                carry = false;
            } else {
                digits[i] = 0;
            }
        }
        if carry {
            break;
        }
    }
    Ok(points)
}

fn sub_vec(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The minimal Hilbert basis of a pointed rational cone.
///
/// Errors when the cone is not pointed (the basis would not be finite or
/// unique) and when the triangulation or a parallelepiped exceeds the size
/// guards.
pub fn hilbert_basis(cone: &IntCone) -> Result<HilbertBasis, Error> {
    if !cone.is_pointed() {
        return Err(Error::NotPointed);
    }
    crate::guard_dim("hilbert basis ambient dimension", cone.dim)?;
    let rays = extreme_generators(cone);
    if rays.is_empty() {
        return Ok(HilbertBasis { elements: Vec::new() });
    }
    let rank = rank_of_int_rows(&rays);
    if binomial(rays.len(), rank) > TRIANGULATION_BUDGET {
        return Err(Error::SizeGuard {
            what: "cone triangulation subsets",
            got: binomial(rays.len(), rank).min(usize::MAX as u128) as usize,
            limit: TRIANGULATION_BUDGET as usize,
        });
    }
    use itertools::Itertools;
    let subsets: Vec<Vec<usize>> = (0..rays.len()).combinations(rank).collect();
    let batches = exec::map_collect(subsets, |subset| {
        let cols: Vec<Vec<Int>> = subset.iter().map(|&i| rays[i].clone()).collect();
        if rank_of_int_rows(&cols) < rank {
            return Ok(Vec::new());
        }
        parallelepiped_points(&cols)
    });
    let mut candidates: BTreeSet<Vec<Int>> = rays.iter().cloned().collect();
    for batch in batches {
        candidates.extend(batch?);
    }
    let pool: Vec<Vec<Int>> = candidates.into_iter().collect();
    let shared = &pool;
    let kept = exec::filter_map_collect(pool.clone(), move |u| {
        let reducible = shared
            .iter()
            .any(|a| a != &u && cone.contains(&sub_vec(&u, a)));
        if reducible {
            None
        } else {
            Some(u)
        }
    });
    Ok(HilbertBasis { elements: kept })
}

/// A filtration of monomial ideals cut out by one covering polyhedron: the
/// n-th piece collects the monomials whose exponent vector, scaled by 1/n,
/// lies in the polyhedron. Pieces and the Hilbert basis of the cone over the
/// polyhedron are memoized per handle.
pub struct Filtration {
    q: CoveringPolyhedron,
    pieces: RwLock<BTreeMap<u64, MonomialIdeal>>,
    basis: OnceLock<HilbertBasis>,
    waldschmidt: OnceLock<Rat>,
}

impl Filtration {
    pub fn new(q: CoveringPolyhedron) -> Self {
        Filtration {
            q,
            pieces: RwLock::new(BTreeMap::new()),
            basis: OnceLock::new(),
            waldschmidt: OnceLock::new(),
        }
    }

    /// The filtration of integral closures of powers of `ideal`: the n-th
    /// piece is the closure of the n-th power.
    pub fn closures_of_powers(ideal: &MonomialIdeal) -> Result<Self, Error> {
        Ok(Filtration::new(newton_polyhedron(ideal)?.polyhedron()?))
    }

    /// The symbolic-power filtration of a squarefree ideal.
    pub fn symbolic(ideal: &MonomialIdeal) -> Result<Self, Error> {
        Ok(Filtration::new(symbolic_polyhedron(ideal)?))
    }

    pub fn polyhedron(&self) -> &CoveringPolyhedron {
        &self.q
    }

    /// The n-th graded piece, memoized.
    pub fn ideal(&self, n: u64) -> Result<MonomialIdeal, Error> {
        if n == 0 {
            return Err(Error::Invalid("filtration pieces are indexed from 1".into()));
        }
        if let Some(found) = self.pieces.read().expect("filtration lock").get(&n) {
            return Ok(found.clone());
        }
        let computed = polyhedron_piece(&self.q, n)?;
        let mut write = self.pieces.write().expect("filtration lock");
        Ok(write.entry(n).or_insert(computed).clone())
    }

    /// Least generator degree of the n-th piece.
    pub fn alpha(&self, n: u64) -> Result<u64, Error> {
        let piece = self.ideal(n)?;
        piece
            .gens()
            .iter()
            .map(|g| g.degree())
            .min()
            .ok_or_else(|| Error::Inconsistent("filtration piece with no generators".into()))
    }

    /// Hilbert basis of the cone over the polyhedron, memoized.
    pub fn simis_basis(&self) -> Result<&HilbertBasis, Error> {
        if let Some(found) = self.basis.get() {
            return Ok(found);
        }
        let computed = hilbert_basis(&simis_cone(&self.q)?)?;
        Ok(self.basis.get_or_init(|| computed))
    }

    /// The common limit of alpha(n)/n, memoized.
    pub fn waldschmidt(&self) -> Result<Rat, Error> {
        if let Some(found) = self.waldschmidt.get() {
            return Ok(found.clone());
        }
        let computed = lp::waldschmidt(&self.q)?;
        Ok(self.waldschmidt.get_or_init(|| computed).clone())
    }
}

impl std::fmt::Debug for Filtration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Filtration")
            .field("ambient", &self.q.ambient())
            .field("constraints", &self.q.constraint_count())
            .finish()
    }
}

/// Minimal generators of {monomials whose exponent vector is in n times the
/// polyhedron}. Each constraint column is cleared of denominators, reduced
/// to primitive integer form <a, c> >= t, and the constraints are processed
/// one at a time: the antichain of minimal solutions of the first k
/// constraints is extended to the (k+1)-st by adding, to every current
/// solution, each minimal completion supported on the new constraint's
/// positive coordinates, and re-minimalizing. The matrix is nonnegative, so
/// the feasible sets are upward closed and every minimal solution of the
/// enlarged system dominates one of the extended candidates. Narrow
/// constraints go first to keep the intermediate antichains small.
fn polyhedron_piece(q: &CoveringPolyhedron, n: u64) -> Result<MonomialIdeal, Error> {
    // Keeps every scaled magnitude far below the i128 overflow line.
    const MAGNITUDE_LIMIT: i64 = 1 << 40;
    let s = q.ambient();
    let mut constraints: Vec<(Vec<i64>, i64)> = Vec::with_capacity(q.constraint_count());
    for i in 0..q.constraint_count() {
        let col = q.column(i);
        let scale = crate::rational::lcm_all(col.iter().map(|c| c.denom()));
        let num: Vec<Int> = col
            .iter()
            .map(|c| c.numer() * (&scale / c.denom()))
            .collect();
        let target = Int::from(n) * &scale;
        let g = num.iter().fold(target.clone(), |g, v| g.gcd(v));
        let scaled = Error::SizeGuard {
            what: "filtration constraint magnitude",
            got: usize::MAX,
            limit: MAGNITUDE_LIMIT as usize,
        };
        let small = |v: Int| v.to_i64().filter(|w| *w <= MAGNITUDE_LIMIT);
        let num: Option<Vec<i64>> = num.iter().map(|v| small(v / &g)).collect();
        match (num, small(&target / &g)) {
            (Some(num), Some(target)) => constraints.push((num, target)),
            _ => return Err(scaled),
        }
    }
    constraints.sort_unstable();
    constraints.dedup();
    // Completion coordinates never exceed ceil(target / smallest positive
    // entry), so the per-constraint widths bound every exponent we can build.
    let mut exponent_bound: i128 = 0;
    for (num, target) in &constraints {
        let min_positive = num.iter().copied().filter(|&c| c > 0).min().unwrap_or(1);
        exponent_bound += ((*target as i128) + (min_positive as i128) - 1) / min_positive as i128;
    }
    if exponent_bound > MAGNITUDE_LIMIT as i128 {
        return Err(Error::SizeGuard {
            what: "filtration exponent bound",
            got: usize::MAX,
            limit: MAGNITUDE_LIMIT as usize,
        });
    }
    constraints.sort_by_key(|(num, target)| {
        let support = num.iter().filter(|&&c| c > 0).count();
        let width: i128 = num
            .iter()
            .copied()
            .filter(|&c| c > 0)
            .map(|c| ((*target as i128) + (c as i128) - 1) / c as i128)
            .sum();
        (support, width)
    });
    // The node budget is shared across the whole computation; parallel
    // tasks seed their local counter from it, so enforcement is exact up to
    // the usual benign fan-out slack.
    let nodes = std::sync::atomic::AtomicU64::new(0);
    let mut current = MonomialIdeal::unit(s);
    for (num, target) in &constraints {
        let support: Vec<usize> = (0..s).filter(|&k| num[k] > 0).collect();
        let coeffs: Vec<i64> = support.iter().map(|&k| num[k]).collect();
        let batches = exec::map_collect(
            current.gens().to_vec(),
            |m| -> Result<Vec<Monomial>, Error> {
                let have: i128 = support
                    .iter()
                    .map(|&k| m.exponents()[k] as i128 * num[k] as i128)
                    .sum();
                let residual = *target as i128 - have;
                if residual <= 0 {
                    return Ok(vec![m]);
                }
                let mut completions: Vec<Vec<u64>> = Vec::new();
                let seed = nodes.load(std::sync::atomic::Ordering::Relaxed);
                let mut local = seed;
                minimal_completions(&coeffs, residual, &mut local, &mut completions)?;
                nodes.fetch_add(local - seed, std::sync::atomic::Ordering::Relaxed);
                Ok(completions
                    .iter()
                    .map(|y| {
                        let mut exponents = m.exponents().to_vec();
                        for (idx, &k) in support.iter().enumerate() {
                            exponents[k] += y[idx];
                        }
                        Monomial::new(exponents)
                    })
                    .collect())
            },
        );
        let mut next: Vec<Monomial> = Vec::new();
        for batch in batches {
            next.extend(batch?);
        }
        current = MonomialIdeal::minimalize(s, next)?;
    }
    Ok(current)
}

/// Appends every minimal nonnegative integer vector y with <y, coeffs> >=
/// residual, for strictly positive coefficients and residual. Minimality is
/// a local test here: y qualifies exactly when decrementing any positive
/// coordinate drops the sum below the residual, so the search emits one
/// candidate per explored prefix (the ceiling value on the next coordinate,
/// zero tail) and recurses only while the sum is still short.
fn minimal_completions(
    coeffs: &[i64],
    residual: i128,
    nodes: &mut u64,
    out: &mut Vec<Vec<u64>>,
) -> Result<(), Error> {
    fn descend(
        coeffs: &[i64],
        residual: i128,
        k: usize,
        acc: i128,
        stack: &mut Vec<u64>,
        nodes: &mut u64,
        out: &mut Vec<Vec<u64>>,
    ) -> Result<(), Error> {
        *nodes += 1;
        if *nodes > ENUMERATION_BUDGET {
            return Err(Error::SizeGuard {
                what: "filtration enumeration nodes",
                got: usize::MAX,
                limit: ENUMERATION_BUDGET as usize,
            });
        }
        if k == coeffs.len() {
            return Ok(());
        }
        let c = coeffs[k] as i128;
        let ceiling = (residual - acc + c - 1) / c;
        for v in 0..ceiling {
            stack.push(v as u64);
            descend(coeffs, residual, k + 1, acc + v * c, stack, nodes, out)?;
            stack.pop();
        }
        let sum = acc + ceiling * c;
        let minimal = stack
            .iter()
            .enumerate()
            .all(|(j, &yj)| yj == 0 || sum - (coeffs[j] as i128) < residual);
        if minimal {
            let mut point = stack.clone();
            point.push(ceiling as u64);
            point.resize(coeffs.len(), 0);
            out.push(point);
        }
        Ok(())
    }
    descend(coeffs, residual, 0, 0, &mut Vec::new(), nodes, out)
}

/// Minimal generators of the n-th piece of a filtration.
pub fn filtration_ideal(f: &Filtration, n: u64) -> Result<MonomialIdeal, Error> {
    f.ideal(n)
}

/// Minimal algebra generators of the Rees algebra of a filtration beyond the
/// base ring: the positive-level Hilbert-basis elements of the cone over the
/// polyhedron, reported as a monomial (the first coordinates) together with
/// its level (the last). The level-0 basis elements are exactly the ambient
/// variables and are omitted.
pub fn rees_filtration_generators(f: &Filtration) -> Result<Vec<(Monomial, u64)>, Error> {
    let basis = f.simis_basis()?;
    let mut out = Vec::with_capacity(basis.len());
    for element in &basis.elements {
        let (degree, coords) = element.split_last().expect("nonempty basis element");
        if degree.is_zero() {
            continue;
        }
        let exps: Vec<u64> = coords
            .iter()
            .map(|e| e.to_u64().expect("cone lattice points are nonnegative"))
            .collect();
        let d = degree.to_u64().expect("levels are nonnegative");
        out.push((Monomial::new(exps), d));
    }
    Ok(out)
}

/// Minimal generators of the integral closure of the n-th power: the n-th
/// piece of the filtration cut out by the Newton polyhedron.
pub fn integral_closure_power(ideal: &MonomialIdeal, n: u64) -> Result<MonomialIdeal, Error> {
    if n == 0 {
        return Err(Error::Invalid("powers are indexed from 1".into()));
    }
    polyhedron_piece(&newton_polyhedron(ideal)?.polyhedron()?, n)
}

/// Minimal generators of the n-th symbolic power of a squarefree ideal,
/// computed as the n-th piece of the filtration cut out by the covering
/// polyhedron of the dual ideal.
pub fn symbolic_power(ideal: &MonomialIdeal, n: u64) -> Result<MonomialIdeal, Error> {
    if n == 0 {
        return Err(Error::Invalid("powers are indexed from 1".into()));
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    polyhedron_piece(&symbolic_polyhedron(ideal)?, n)
}

/// Outcome of a normality test: when the answer is negative, `witness` is a
/// monomial together with the power d whose closure it certifies strictly
/// larger, i.e. the monomial is integral over the d-th power without lying
/// in it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalityReport {
    pub normal: bool,
    pub witness: Option<(Monomial, u64)>,
}

/// Whether every power of the ideal is integrally closed.
///
/// The Rees cone of the ideal is pointed, and its lattice semigroup is
/// generated in levels 0 and 1 by the variables and the generator exponents
/// exactly when the ideal is normal. Any Hilbert-basis element beyond that
/// set certifies a monomial integral over some power d without membership;
/// the reported witness has the smallest level, then the smallest exponent
/// vector lexicographically.
pub fn is_normal(ideal: &MonomialIdeal) -> Result<NormalityReport, Error> {
    let cone = rees_cone(ideal)?;
    let basis = hilbert_basis(&cone)?;
    let s = ideal.vars();
    let generator_rows: BTreeSet<Vec<Int>> = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut row: Vec<Int> = g.exponents().iter().map(|&e| Int::from(e)).collect();
            row.push(Int::one());
            row
        })
        .collect();
    let one = Int::one();
    let mut violations: Vec<(u64, Vec<u64>)> = Vec::new();
    for element in &basis.elements {
        let level = &element[s];
        if level.is_zero() {
            continue;
        }
        if *level == one && generator_rows.contains(element) {
            continue;
        }
        let exps: Vec<u64> = element[..s]
            .iter()
            .map(|e| e.to_u64().expect("cone lattice points are nonnegative"))
            .collect();
        violations.push((level.to_u64().expect("small level"), exps));
    }
    if violations.is_empty() {
        return Ok(NormalityReport { normal: true, witness: None });
    }
    violations.sort();
    let (d, exps) = violations.swap_remove(0);
    let witness = Monomial::new(exps);
    if ideal.power(d).contains_monomial(&witness) {
        return Err(Error::Inconsistent(
            "normality witness lies in the power it should escape".into(),
        ));
    }
    Ok(NormalityReport { normal: false, witness: Some((witness, d)) })
}

/// Max-flow min-cut property of a clutter: the covering polyhedron of its
/// edge ideal is integral and the edge ideal is normal.
pub fn is_mfmc(clutter: &Clutter) -> Result<bool, Error> {
    let ideal = clutter.edge_ideal()?;
    Ok(covering_polyhedron(&ideal)?.is_integral()? && is_normal(&ideal)?.normal)
}

/// Whether the Newton polyhedron coincides with the intersection of the
/// Newton polyhedra of the irreducible components.
pub fn np_equals_ip(ideal: &MonomialIdeal) -> Result<bool, Error> {
    newton_polyhedron(ideal)?
        .polyhedron()?
        .equals(&irreducible_polyhedron(ideal)?)
}

/// A period k at which the limit of alpha(n)/n is attained exactly:
/// alpha(k)/k equals the optimum of the covering linear program. The
/// candidate is the least common multiple of the positive levels of the
/// Hilbert basis of the cone over the polyhedron, and the returned value is
/// verified at k and 2k.
pub fn waldschmidt_period(f: &Filtration) -> Result<(u64, Rat), Error> {
    let basis = f.simis_basis()?;
    let mut k: u64 = 1;
    for element in &basis.elements {
        let level = element
            .last()
            .expect("nonempty basis element")
            .to_u64()
            .expect("small level");
        if level > 0 {
            k = k.lcm(&level);
        }
    }
    let value = f.waldschmidt()?;
    for multiple in [k, 2 * k] {
        let attained = Rat::new(Int::from(f.alpha(multiple)?), Int::from(multiple));
        if attained != value {
            return Err(Error::Inconsistent(format!(
                "alpha({multiple})/{multiple} does not attain the covering optimum"
            )));
        }
    }
    Ok((k, value))
}

/// Whether the closure of the n-th power of the first piece recovers every
/// piece. True exactly when the polyhedron is integral; the first `cap`
/// pieces are compared outright, and a discrepancy below the cap on an
/// integral polyhedron is a consistency failure rather than a verdict.
pub fn closure_equals_filtration(f: &Filtration, cap: u64) -> Result<bool, Error> {
    let integral = f.polyhedron().is_integral()?;
    let first = f.ideal(1)?;
    for n in 1..=cap {
        if integral_closure_power(&first, n)? != f.ideal(n)? {
            if integral {
                return Err(Error::Inconsistent(format!(
                    "integral polyhedron but closure of power {n} misses the piece"
                )));
            }
            return Ok(false);
        }
    }
    Ok(integral)
}

/// Whether the plain powers of the first piece recover every piece. True
/// exactly when the polyhedron is integral and the first piece is normal;
/// the first `cap` pieces are compared outright, and a discrepancy below
/// the cap against a positive verdict is a consistency failure.
pub fn powers_equal_filtration(f: &Filtration, cap: u64) -> Result<bool, Error> {
    let first = f.ideal(1)?;
    let verdict = f.polyhedron().is_integral()? && is_normal(&first)?.normal;
    for n in 1..=cap {
        if first.power(n) != f.ideal(n)? {
            if verdict {
                return Err(Error::Inconsistent(format!(
                    "normal first piece over an integral polyhedron misses piece {n}"
                )));
            }
            return Ok(false);
        }
    }
    Ok(verdict)
}
