//! Exact rational linear programming and its two applications here: the
//! Waldschmidt constant of a covering polyhedron (minimize the coordinate
//! sum) and the ic-resurgence of a strict filtration (a family of linear
//! programs, one per column of the Newton H-representation, reduced from
//! linear-fractional form by the Charnes–Cooper substitution).
//!
//! The solver is a two-phase primal simplex over `Rat` with Bland's
//! anti-cycling rule. All variables are free — nonnegativity must be stated
//! as explicit constraint rows — and optimal points are made deterministic
//! by a reverse-lexicographic refinement: on the optimal face, the last
//! coordinate is minimized first, then the second to last, and so on. The
//! refined point is a vertex of the feasible polyhedron whenever that
//! polyhedron is pointed.

use num::Signed;

use crate::exec;
use crate::ideals::MonomialIdeal;
use crate::linalg::dot;
use crate::polyhedra::{covering_polyhedron, rees_cone_facets, CoveringPolyhedron, NewtonHRep};
use crate::rational::{lex_cmp, primitive_integer, Int, Rat};
use crate::Error;

/// Direction of optimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// Constraint relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

/// One linear constraint ⟨coeffs, y⟩ {≥,≤,=} rhs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, relation: Relation, rhs: Rat) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }

    /// Whether the constraint holds at `point`.
    pub fn satisfied_at(&self, point: &[Rat]) -> bool {
        let lhs = dot(&self.coeffs, point);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }

    /// Whether the constraint is binding (holds with equality) at `point`.
    pub fn binding_at(&self, point: &[Rat]) -> bool {
        dot(&self.coeffs, point) == self.rhs
    }
}

/// A linear program over free variables; every sign restriction is an
/// explicit row.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
}

/// Solver verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solution of a linear program. When `status` is `Optimal`, `point` is
/// feasible with `objective(point) = value` and `binding` lists the indices
/// of the constraints holding with equality there — the certificate that the
/// point is a vertex when those rows span the variable space.
#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    pub value: Rat,
    pub point: Vec<Rat>,
    pub binding: Vec<usize>,
}

struct RawSolution {
    status: LpStatus,
    value: Rat,
    point: Vec<Rat>,
}

/// Dense simplex tableau in standard form: minimize over Ax = b, x ≥ 0,
/// b ≥ 0, with the current basis maintained as identity columns.
struct Tableau {
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rat {
        &self.rows[r][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].clone().recip();
        for v in self.rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..self.rows.len() {
            if i != r && !self.rows[i][c].is_zero() {
                let factor = self.rows[i][c].clone();
                for j in 0..=self.cols {
                    let delta = &factor * &self.rows[r][j];
                    self.rows[i][j] -= delta;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland-rule simplex iterations for the given cost vector until
    /// optimality (`Ok`) or an unbounded ray is found (`Err`).
    fn run(&mut self, costs: &[Rat]) -> Result<(), ()> {
        loop {
            let entering = (0..self.cols).find(|&j| {
                let mut reduced = costs[j].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    if !costs[b].is_zero() && !self.rows[r][j].is_zero() {
                        reduced -= &costs[b] * &self.rows[r][j];
                    }
                }
                reduced.is_negative()
            });
            let Some(j) = entering else {
                return Ok(());
            };
            let mut leaving: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][j].is_positive() {
                    let ratio = self.rhs(r) / &self.rows[r][j];
                    let better = match &leaving {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio
                                || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leaving = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leaving else {
                return Err(());
            };
            self.pivot(r, j);
        }
    }

    fn objective_value(&self, costs: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            if !costs[b].is_zero() {
                acc += &costs[b] * self.rhs(r);
            }
        }
        acc
    }
}

/// One plain simplex solve: two phases, split free variables, Bland's rule.
/// The returned point is the basic solution of the final tableau.
fn simplex_once(
    sense: Sense,
    objective: &[Rat],
    constraints: &[Constraint],
) -> Result<RawSolution, Error> {
    let n = objective.len();
    for (i, c) in constraints.iter().enumerate() {
        if c.coeffs.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "constraint {i} has {} coefficients, expected {n}",
                c.coeffs.len()
            )));
        }
    }
    let m = constraints.len();
    let nslack = constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let split = 2 * n;
    let art_start = split + nslack;
    let cols = art_start + m;

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut slack = 0usize;
    for (r, c) in constraints.iter().enumerate() {
        let mut row = vec![Rat::zero(); cols + 1];
        for (i, a) in c.coeffs.iter().enumerate() {
            row[2 * i] = a.clone();
            row[2 * i + 1] = -a.clone();
        }
        match c.relation {
            Relation::Ge => {
                row[split + slack] = -Rat::one();
                slack += 1;
            }
            Relation::Le => {
                row[split + slack] = Rat::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[cols] = c.rhs.clone();
        if row[cols].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        row[art_start + r] = Rat::one();
        rows.push(row);
    }

    let mut tab = Tableau {
        rows,
        basis: (0..m).map(|r| art_start + r).collect(),
        cols,
    };

    // Phase one: drive the artificial variables to zero.
    let mut phase1 = vec![Rat::zero(); cols];
    for c in phase1.iter_mut().skip(art_start) {
        *c = Rat::one();
    }
    tab.run(&phase1)
        .expect("phase one is bounded below by zero");
    if !tab.objective_value(&phase1).is_zero() {
        return Ok(RawSolution {
            status: LpStatus::Infeasible,
            value: Rat::zero(),
            point: Vec::new(),
        });
    }
    // Pivot leftover artificials out of the basis; a row with no usable
    // column is a redundant constraint and is dropped.
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= art_start {
            match (0..art_start).find(|&j| !tab.rows[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    for row in tab.rows.iter_mut() {
        let rhs = row.pop().expect("row has rhs");
        row.truncate(art_start);
        row.push(rhs);
    }
    tab.cols = art_start;

    // Phase two: the real objective in min form on the split variables.
    let mut phase2 = vec![Rat::zero(); art_start];
    for (i, c) in objective.iter().enumerate() {
        let c = if sense == Sense::Max { -c.clone() } else { c.clone() };
        phase2[2 * i] = c.clone();
        phase2[2 * i + 1] = -c;
    }
    if tab.run(&phase2).is_err() {
        return Ok(RawSolution {
            status: LpStatus::Unbounded,
            value: Rat::zero(),
            point: Vec::new(),
        });
    }
    let min_value = tab.objective_value(&phase2);
    let mut x = vec![Rat::zero(); art_start];
    for (r, &b) in tab.basis.iter().enumerate() {
        x[b] = tab.rhs(r).clone();
    }
    let point: Vec<Rat> = (0..n).map(|i| &x[2 * i] - &x[2 * i + 1]).collect();
    let value = if sense == Sense::Max {
        -min_value
    } else {
        min_value
    };
    Ok(RawSolution {
        status: LpStatus::Optimal,
        value,
        point,
    })
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut e = vec![Rat::zero(); n];
    e[i] = Rat::one();
    e
}

/// Solves the program exactly. On an optimal outcome the returned point is
/// deterministic: the reverse-lexicographically minimal point of the optimal
/// face (last coordinate minimized first), computed by a chain of auxiliary
/// solves that pin one coordinate at a time.
pub fn solve(lp: &LinearProgram) -> Result<LpSolution, Error> {
    let n = lp.objective.len();
    let raw = simplex_once(lp.sense, &lp.objective, &lp.constraints)?;
    if raw.status != LpStatus::Optimal {
        return Ok(LpSolution {
            status: raw.status,
            value: Rat::zero(),
            point: Vec::new(),
            binding: Vec::new(),
        });
    }
    let mut work = lp.constraints.clone();
    work.push(Constraint::new(
        lp.objective.clone(),
        Relation::Eq,
        raw.value.clone(),
    ));
    let mut point = raw.point;
    for i in (0..n).rev() {
        let e = unit(n, i);
        let sub = simplex_once(Sense::Min, &e, &work)?;
        match sub.status {
            LpStatus::Optimal => {
                work.push(Constraint::new(e, Relation::Eq, sub.value.clone()));
                point = sub.point;
            }
            // The coordinate is unbounded below on the optimal face; leave it
            // to the basic solutions of the later solves.
            LpStatus::Unbounded => {}
            LpStatus::Infeasible => {
                return Err(Error::Inconsistent(
                    "optimal-face refinement became infeasible".into(),
                ));
            }
        }
    }
    let binding = lp
        .constraints
        .iter()
        .enumerate()
        .filter(|(_, c)| c.binding_at(&point))
        .map(|(i, _)| i)
        .collect();
    Ok(LpSolution {
        status: LpStatus::Optimal,
        value: raw.value,
        point,
        binding,
    })
}

/// The program minimize y_1 + ⋯ + y_s subject to yC ≥ 1, y ≥ 0, whose
/// optimal value is the Waldschmidt constant of the filtration of Q(C).
pub fn covering_program(q: &CoveringPolyhedron) -> LinearProgram {
    let s = q.ambient();
    let mut constraints: Vec<Constraint> = (0..q.constraint_count())
        .map(|j| Constraint::new(q.column(j), Relation::Ge, Rat::one()))
        .collect();
    for i in 0..s {
        constraints.push(Constraint::new(unit(s, i), Relation::Ge, Rat::zero()));
    }
    LinearProgram {
        sense: Sense::Min,
        objective: vec![Rat::one(); s],
        constraints,
    }
}

/// The Waldschmidt constant of the filtration of Q(C): the optimal value of
/// the covering program. It always equals the smallest vertex coordinate sum
/// of Q(C).
pub fn waldschmidt(q: &CoveringPolyhedron) -> Result<Rat, Error> {
    let sol = solve(&covering_program(q))?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::Inconsistent(
            "coordinate-sum program must have an optimum".into(),
        ));
    }
    Ok(sol.value)
}

/// How strictness of the filtration was established before a resurgence run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrictnessEvidence {
    /// Every entry of the covering matrix is ≤ 1.
    EntriesAtMostOne,
    /// Q(C) has an integral vertex.
    IntegralVertex,
    /// The caller vouched for strictness.
    Asserted,
    /// None of the sufficient conditions held; the value is computed anyway.
    Unverified,
}

impl StrictnessEvidence {
    pub fn as_str(&self) -> &'static str {
        match self {
            StrictnessEvidence::EntriesAtMostOne => "entries at most one",
            StrictnessEvidence::IntegralVertex => "integral vertex",
            StrictnessEvidence::Asserted => "asserted by caller",
            StrictnessEvidence::Unverified => "unverified",
        }
    }
}

/// Checks the two sufficient conditions for strictness, then the caller
/// override, in that order.
pub fn strictness_evidence(
    q: &CoveringPolyhedron,
    assume: bool,
) -> Result<StrictnessEvidence, Error> {
    let c = q.matrix();
    let small = (0..c.nrows()).all(|i| (0..c.ncols()).all(|j| c[(i, j)] <= Rat::one()));
    if small {
        return Ok(StrictnessEvidence::EntriesAtMostOne);
    }
    let integral_vertex = q
        .vertices()?
        .iter()
        .any(|v| v.coords.iter().all(Rat::is_integer));
    if integral_vertex {
        return Ok(StrictnessEvidence::IntegralVertex);
    }
    Ok(if assume {
        StrictnessEvidence::Asserted
    } else {
        StrictnessEvidence::Unverified
    })
}

/// Result of a resurgence computation: the value, the optimal vertex of the
/// winning program (s+3 coordinates), and the facet row (n_jβ_j, −n_j) whose
/// program attained the maximum.
#[derive(Clone, Debug)]
pub struct ResurgenceReport {
    pub value: Rat,
    pub vertex: Vec<Rat>,
    pub witness_facet: Vec<Int>,
    pub strictness: StrictnessEvidence,
    pub note: Option<String>,
}

/// The j-th member of the resurgence family for the filtration of Q(C) with
/// Newton data `np`: variables y_1..y_{s+3}, maximize y_{s+1} subject to
/// ⟨y, c_i⟩ − y_{s+1} ≥ 0 for every column c_i of C, y_{s+1} ≥ y_{s+3},
/// y_i ≥ 0 (i ≤ s), y_{s+3} ≥ 0, n_j y_{s+2} − ⟨y, n_jβ_j⟩ ≥ y_{s+3}, and
/// the literal normalization y_{s+2} = 1.
pub fn resurgence_lp(q: &CoveringPolyhedron, np: &NewtonHRep, j: usize) -> LinearProgram {
    let s = q.ambient();
    let nv = s + 3;
    let mut constraints = Vec::new();
    for i in 0..q.constraint_count() {
        let mut coeffs = vec![Rat::zero(); nv];
        coeffs[..s].clone_from_slice(&q.column(i));
        coeffs[s] = -Rat::one();
        constraints.push(Constraint::new(coeffs, Relation::Ge, Rat::zero()));
    }
    let mut cmp = vec![Rat::zero(); nv];
    cmp[s] = Rat::one();
    cmp[s + 2] = -Rat::one();
    constraints.push(Constraint::new(cmp, Relation::Ge, Rat::zero()));
    for i in 0..s {
        constraints.push(Constraint::new(unit(nv, i), Relation::Ge, Rat::zero()));
    }
    constraints.push(Constraint::new(unit(nv, s + 2), Relation::Ge, Rat::zero()));
    let nj = Rat::from(np.denominators[j].clone());
    let mut facet = vec![Rat::zero(); nv];
    for (i, b) in np.columns[j].iter().enumerate() {
        facet[i] = -(&nj * b);
    }
    facet[s + 1] = nj;
    facet[s + 2] = -Rat::one();
    constraints.push(Constraint::new(facet, Relation::Ge, Rat::zero()));
    constraints.push(Constraint::new(unit(nv, s + 1), Relation::Eq, Rat::one()));
    LinearProgram {
        sense: Sense::Max,
        objective: unit(nv, s),
        constraints,
    }
}

/// The primitive integer facet row (n_jβ_j, −n_j) of the j-th Newton column.
fn facet_row(np: &NewtonHRep, j: usize) -> Vec<Int> {
    let mut row = np.columns[j].clone();
    row.push(-Rat::one());
    primitive_integer(&row)
}

/// The ic-resurgence of the (strict) filtration of Q(C), where `np` is the
/// Newton H-representation of I_1: the maximum over j of the optimal values
/// of [`resurgence_lp`]. Ties are resolved deterministically — the
/// lexicographically largest optimal vertex wins, then the lexicographically
/// smallest facet row.
pub fn ic_resurgence(
    q: &CoveringPolyhedron,
    np: &NewtonHRep,
    assume_strict: bool,
) -> Result<ResurgenceReport, Error> {
    let s = q.ambient();
    if np.is_empty() {
        return Err(Error::Invalid("Newton data has no columns".into()));
    }
    for (j, col) in np.columns.iter().enumerate() {
        if col.len() != s {
            return Err(Error::DimensionMismatch(format!(
                "Newton column {j} has {} coordinates, ambient is {s}",
                col.len()
            )));
        }
    }
    let strictness = strictness_evidence(q, assume_strict)?;
    let solved: Vec<Result<(Rat, Vec<Rat>, Vec<Int>), Error>> =
        exec::map_collect((0..np.len()).collect(), |j| {
            let sol = solve(&resurgence_lp(q, np, j))?;
            match sol.status {
                LpStatus::Optimal => Ok((sol.value, sol.point, facet_row(np, j))),
                LpStatus::Unbounded => Err(Error::ResurgenceUnbounded),
                LpStatus::Infeasible => Err(Error::Inconsistent(
                    "resurgence subproblem infeasible despite trivial point".into(),
                )),
            }
        });
    let mut best: Option<(Rat, Vec<Rat>, Vec<Int>)> = None;
    for item in solved {
        let (value, vertex, facet) = item?;
        let wins = match &best {
            None => true,
            Some((bv, bvx, bf)) => {
                value > *bv
                    || (value == *bv
                        && (lex_cmp(&vertex, bvx) == std::cmp::Ordering::Greater
                            || (vertex == *bvx && facet < *bf)))
            }
        };
        if wins {
            best = Some((value, vertex, facet));
        }
    }
    let (value, vertex, witness_facet) = best.expect("at least one column");
    let note = (strictness == StrictnessEvidence::Unverified)
        .then(|| "strictness unverified: no sufficient condition held".to_string());
    Ok(ResurgenceReport {
        value,
        vertex,
        witness_facet,
        strictness,
        note,
    })
}

/// End-to-end resurgence of the symbolic filtration of a squarefree monomial
/// ideal: covering matrix from the Alexander dual, Newton columns from the
/// Rees-cone facets, then the program family. Height-one ideals short-circuit
/// to 1.
pub fn ic_resurgence_of_squarefree(ideal: &MonomialIdeal) -> Result<ResurgenceReport, Error> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let dual = ideal.alexander_dual()?;
    let height = dual
        .gens()
        .iter()
        .map(|g| g.degree())
        .min()
        .expect("dual of a proper nonzero ideal has generators");
    if height <= 1 {
        return Ok(ResurgenceReport {
            value: Rat::one(),
            vertex: Vec::new(),
            witness_facet: Vec::new(),
            strictness: StrictnessEvidence::EntriesAtMostOne,
            note: Some(
                "height one: ordinary and symbolic powers agree, resurgence is 1".to_string(),
            ),
        });
    }
    let s = ideal.vars();
    let mut columns = Vec::new();
    let mut denominators = Vec::new();
    for row in rees_cone_facets(ideal)? {
        if row[s].is_negative() {
            let d = -Rat::from(row[s].clone());
            columns.push(
                row[..s]
                    .iter()
                    .map(|v| Rat::from(v.clone()) / d.clone())
                    .collect::<Vec<Rat>>(),
            );
            denominators.push(-row[s].clone());
        }
    }
    let np = NewtonHRep {
        columns,
        denominators,
    };
    let q = covering_polyhedron(&dual)?;
    ic_resurgence(&q, &np, false)
}
