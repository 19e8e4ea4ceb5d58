//! Covering polyhedra, their certified vertex sets, the Newton/irreducible/
//! symbolic polyhedra of monomial ideals, and the Simis and Rees cones.
//!
//! A covering polyhedron is Q(C) = {x ≥ 0 : xC ≥ 1} for a nonnegative
//! rational matrix C with nonzero columns. Such polyhedra are blocking-type:
//! Q(C) = R₊ˢ + conv(vertices), so vertex lists determine them completely and
//! containment reduces to checking vertices against the other's constraints.
//!
//! Vertex enumeration is exhaustive over basic solutions (auditable at desk
//! scale); facet enumeration for cones runs an exact integer double
//! description with combinatorial adjacency pruning.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use itertools::Itertools;
use num::{One, Signed, Zero};

use crate::exec;
use crate::ideals::MonomialIdeal;
use crate::linalg::{dot, QMatrix};
use crate::rational::{lcm_all, primitive_integer, Int, Rat};
use crate::Error;

/// Combinations to enumerate before the vertex search refuses to run.
const SUBSET_BUDGET: u128 = 20_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// A vertex with its certificate: the indices of `s` constraints that are
/// binding and linearly independent at the point. Indices `0..m` are the
/// column constraints ⟨x, c_j⟩ ≥ 1; indices `m..m+s` are the sign
/// constraints x_{i−m} ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub coords: Vec<Rat>,
    pub binding: Vec<usize>,
}

/// The polyhedron Q(C) = {x ≥ 0 : xC ≥ 1}, with a lazily computed vertex set.
#[derive(Clone, Debug)]
pub struct CoveringPolyhedron {
    c: QMatrix,
    vertices: OnceLock<Vec<Vertex>>,
}

impl CoveringPolyhedron {
    /// Validates the covering matrix: entries ≥ 0, no zero column.
    pub fn new(c: QMatrix) -> Result<Self, Error> {
        if c.nrows() == 0 || c.ncols() == 0 {
            return Err(Error::Invalid(
                "covering matrix needs at least one row and column".into(),
            ));
        }
        for i in 0..c.nrows() {
            for j in 0..c.ncols() {
                if c[(i, j)].is_negative() {
                    return Err(Error::Invalid(format!(
                        "covering matrix entry ({i},{j}) is negative"
                    )));
                }
            }
        }
        for j in 0..c.ncols() {
            if (0..c.nrows()).all(|i| c[(i, j)].is_zero()) {
                return Err(Error::Invalid(format!(
                    "covering matrix column {j} is zero"
                )));
            }
        }
        Ok(CoveringPolyhedron {
            c,
            vertices: OnceLock::new(),
        })
    }

    /// Builds from columns (each of length `ambient`).
    pub fn from_columns(ambient: usize, columns: &[Vec<Rat>]) -> Result<Self, Error> {
        let mut c = QMatrix::zeros(ambient, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, ambient is {ambient}",
                    col.len()
                )));
            }
            for (i, value) in col.iter().enumerate() {
                c[(i, j)] = value.clone();
            }
        }
        CoveringPolyhedron::new(c)
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.c
    }

    /// Ambient dimension s.
    pub fn ambient(&self) -> usize {
        self.c.nrows()
    }

    /// Number of column constraints m.
    pub fn constraint_count(&self) -> usize {
        self.c.ncols()
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        self.c.col(j)
    }

    /// Membership: x ≥ 0 and ⟨x, c_j⟩ ≥ 1 for every column.
    pub fn contains_point(&self, x: &[Rat]) -> Result<bool, Error> {
        if x.len() != self.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ambient is {}",
                x.len(),
                self.ambient()
            )));
        }
        if x.iter().any(Rat::is_negative) {
            return Ok(false);
        }
        Ok((0..self.c.ncols()).all(|j| dot(x, &self.c.col(j)) >= Rat::one()))
    }

    /// The complete vertex set, sorted lexicographically, each vertex carrying
    /// its binding-constraint certificate. Computed once and cached.
    pub fn vertices(&self) -> Result<&[Vertex], Error> {
        if let Some(v) = self.vertices.get() {
            return Ok(v);
        }
        let computed = self.enumerate_vertices()?;
        Ok(self.vertices.get_or_init(|| computed))
    }

    /// Exhaustive basic-solution enumeration: every s-subset of the m+s
    /// constraints, solved exactly; feasible solutions are vertices.
    fn enumerate_vertices(&self) -> Result<Vec<Vertex>, Error> {
        let s = self.ambient();
        let m = self.constraint_count();
        crate::guard_dim("vertex enumeration ambient dimension", s)?;
        if binomial(m + s, s) > SUBSET_BUDGET {
            return Err(Error::SizeGuard {
                what: "vertex enumeration constraint subsets",
                got: m + s,
                limit: s,
            });
        }
        let subsets: Vec<Vec<usize>> = (0..m + s).combinations(s).collect();
        let candidates: Vec<(Vec<Rat>, Vec<usize>)> =
            exec::filter_map_collect(subsets, |subset| {
                let mut rows = Vec::with_capacity(s);
                let mut rhs = Vec::with_capacity(s);
                for &idx in &subset {
                    if idx < m {
                        rows.push(self.c.col(idx));
                        rhs.push(Rat::one());
                    } else {
                        let mut e = vec![Rat::zero(); s];
                        e[idx - m] = Rat::one();
                        rows.push(e);
                        rhs.push(Rat::zero());
                    }
                }
                let system = QMatrix::from_rows(rows).expect("square rows");
                let x = system.solve_unique(&rhs).expect("dimensions agree")?;
                let feasible = x.iter().all(|v| !v.is_negative())
                    && (0..m).all(|j| dot(&x, &self.c.col(j)) >= Rat::one());
                feasible.then_some((x, subset))
            });
        // Subsets stream in lexicographic order, so the first certificate
        // seen for a point is the lexicographically smallest one.
        let mut dedup: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
        for (coords, binding) in candidates {
            dedup.entry(coords).or_insert(binding);
        }
        Ok(dedup
            .into_iter()
            .map(|(coords, binding)| Vertex { coords, binding })
            .collect())
    }

    /// True when every vertex is integral.
    pub fn is_integral(&self) -> Result<bool, Error> {
        Ok(self
            .vertices()?
            .iter()
            .all(|v| v.coords.iter().all(Rat::is_integer)))
    }

    /// Set equality. Valid for blocking-type polyhedra (both recession cones
    /// are R₊ˢ): inclusion holds iff every vertex satisfies the other's
    /// constraints.
    pub fn equals(&self, other: &CoveringPolyhedron) -> Result<bool, Error> {
        if self.ambient() != other.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient(),
                other.ambient()
            )));
        }
        for v in self.vertices()? {
            if !other.contains_point(&v.coords)? {
                return Ok(false);
            }
        }
        for v in other.vertices()? {
            if !self.contains_point(&v.coords)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Q(I): the covering polyhedron of the incidence matrix of I.
pub fn covering_polyhedron(ideal: &MonomialIdeal) -> Result<CoveringPolyhedron, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    CoveringPolyhedron::new(ideal.incidence_matrix())
}

/// H-representation of a Newton polyhedron: NP(I) = Q(B) where the columns
/// β_j of B are the vertices of Q(incidence(I)), each with the minimal
/// positive integer n_j making n_jβ_j integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonHRep {
    pub columns: Vec<Vec<Rat>>,
    pub denominators: Vec<Int>,
}

impl NewtonHRep {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// The polyhedron Q(B) itself.
    pub fn polyhedron(&self) -> Result<CoveringPolyhedron, Error> {
        let ambient = self.columns.first().map_or(0, Vec::len);
        CoveringPolyhedron::from_columns(ambient, &self.columns)
    }

    /// The homogeneous facet rows (n_jβ_j, −n_j), one per column. These are
    /// primitive integer vectors; together with the axis rows they form the
    /// H-representation of the homogenized (Rees) cone.
    pub fn homogeneous_rows(&self) -> Vec<Vec<Int>> {
        self.columns
            .iter()
            .map(|beta| {
                let mut row: Vec<Rat> = beta.clone();
                row.push(-Rat::one());
                primitive_integer(&row)
            })
            .collect()
    }
}

/// NP(I) as a covering-form H-representation (columns = vertices of Q(I)).
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonHRep, Error> {
    let q = covering_polyhedron(ideal)?;
    let vertices = q.vertices()?;
    let columns: Vec<Vec<Rat>> = vertices.iter().map(|v| v.coords.clone()).collect();
    let denominators: Vec<Int> = columns
        .iter()
        .map(|beta| lcm_all(beta.iter().map(|r| r.denom())))
        .collect();
    Ok(NewtonHRep {
        columns,
        denominators,
    })
}

/// IP(I): the covering polyhedron whose columns are the reciprocals α⁻¹ of
/// the exponent vectors of the irreducible components of I.
pub fn irreducible_polyhedron(ideal: &MonomialIdeal) -> Result<CoveringPolyhedron, Error> {
    let components = ideal.irreducible_decomposition()?;
    let columns: Vec<Vec<Rat>> = components
        .iter()
        .map(|c| c.reciprocal())
        .collect();
    CoveringPolyhedron::from_columns(ideal.vars(), &columns)
}

/// The symbolic polyhedron of a squarefree ideal: Q(I^∨).
pub fn symbolic_polyhedron(ideal: &MonomialIdeal) -> Result<CoveringPolyhedron, Error> {
    covering_polyhedron(&ideal.alexander_dual()?)
}

/// A pointed rational cone with integer generators and primitive integer
/// facet normals: cone = {x : ⟨x, f⟩ ≥ 0 for every facet normal f}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntCone {
    pub dim: usize,
    pub generators: Vec<Vec<Int>>,
    pub facets: Vec<Vec<Int>>,
}

impl IntCone {
    /// Membership of an integer point: every facet inequality holds.
    pub fn contains(&self, x: &[Int]) -> bool {
        assert_eq!(x.len(), self.dim, "cone ambient mismatch");
        self.facets.iter().all(|f| {
            f.iter()
                .zip(x)
                .map(|(a, b)| a * b)
                .sum::<Int>()
                >= Int::zero()
        })
    }

    /// Indices of facets binding at `x` (⟨x, f⟩ = 0).
    pub fn binding_facets(&self, x: &[Int]) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                f.iter().zip(x).map(|(a, b)| a * b).sum::<Int>() == Int::zero()
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// A cone is pointed iff its facet normals span the ambient space
    /// (otherwise the kernel direction and its negative both lie inside).
    pub fn is_pointed(&self) -> bool {
        let rows: Vec<Vec<Rat>> = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| Rat::from(v.clone())).collect())
            .collect();
        if rows.is_empty() {
            return self.dim == 0;
        }
        QMatrix::from_rows(rows).expect("equal lengths").rank() == self.dim
    }
}

/// The Simis cone of Q(C): {x ∈ R^{s+1} : x ≥ 0, ⟨x, (c_j, −1)⟩ ≥ 0 ∀j}.
/// Facets are the s+1 axis rows plus the cleared constraint rows; generators
/// are the e_i together with primitive multiples of (β, 1) over the vertices
/// β of Q(C) — these are exactly its extreme rays.
pub fn simis_cone(q: &CoveringPolyhedron) -> Result<IntCone, Error> {
    let s = q.ambient();
    let dim = s + 1;
    let mut facets: Vec<Vec<Int>> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::one();
            e
        })
        .collect();
    for j in 0..q.constraint_count() {
        let mut row = q.column(j);
        row.push(-Rat::one());
        let mut cleared = primitive_integer(&row);
        if cleared[s].is_positive() {
            for v in cleared.iter_mut() {
                *v = -v.clone();
            }
        }
        if !facets.contains(&cleared) {
            facets.push(cleared);
        }
    }
    let mut generators: Vec<Vec<Int>> = (0..s)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::one();
            e
        })
        .collect();
    for vertex in q.vertices()? {
        let mut ray = vertex.coords.clone();
        ray.push(Rat::one());
        generators.push(primitive_integer(&ray));
    }
    Ok(IntCone {
        dim,
        generators,
        facets,
    })
}

/// One ray of the evolving double-description pair: its primitive vector and
/// the bitmask of already-inserted halfspaces that are tight at it.
struct Ray {
    v: Vec<Int>,
    tight: u128,
}

fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of the cone {y : ⟨h, y⟩ ≥ 0 for every h in `halfspaces`},
/// by iterative halfspace insertion (double description). The lineality space
/// shrinks as halfspaces arrive; the result is valid only when the final cone
/// is pointed, which callers guarantee (the primal cone is full-dimensional).
fn dual_extreme_rays(halfspaces: &[Vec<Int>], dim: usize) -> Result<Vec<Vec<Int>>, Error> {
    if halfspaces.len() > 128 {
        return Err(Error::SizeGuard {
            what: "double description halfspace count",
            got: halfspaces.len(),
            limit: 128,
        });
    }
    let mut lineality: Vec<Vec<Int>> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::one();
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    for (t, a) in halfspaces.iter().enumerate() {
        let pivot = lineality.iter().position(|l| !dot_int(a, l).is_zero());
        if let Some(k) = pivot {
            // The halfspace slices the lineality space: one basis vector
            // becomes a ray on the positive side, everything else is
            // projected onto the hyperplane.
            let mut l = lineality.swap_remove(k);
            if dot_int(a, &l).is_negative() {
                for v in l.iter_mut() {
                    *v = -v.clone();
                }
            }
            let al = dot_int(a, &l);
            for other in lineality.iter_mut() {
                let ao = dot_int(a, other);
                if !ao.is_zero() {
                    let adjusted: Vec<Int> = other
                        .iter()
                        .zip(&l)
                        .map(|(o, lv)| &al * o - &ao * lv)
                        .collect();
                    *other = adjusted;
                    crate::linalg::make_primitive(other);
                }
            }
            for ray in rays.iter_mut() {
                let ar = dot_int(a, &ray.v);
                if !ar.is_zero() {
                    let adjusted: Vec<Int> = ray
                        .v
                        .iter()
                        .zip(&l)
                        .map(|(r, lv)| &al * r - &ar * lv)
                        .collect();
                    ray.v = adjusted;
                    crate::linalg::make_primitive(&mut ray.v);
                }
                ray.tight |= 1 << t;
            }
            let tight = if t == 0 { 0 } else { (1u128 << t) - 1 };
            rays.push(Ray { v: l, tight });
            continue;
        }
        // Lineality is entirely on the hyperplane: classic ray splitting.
        let dots: Vec<Int> = rays.iter().map(|r| dot_int(a, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (ray, d) in rays.iter().zip(&dots) {
            if !d.is_negative() {
                next.push(Ray {
                    v: ray.v.clone(),
                    tight: if d.is_zero() {
                        ray.tight | (1 << t)
                    } else {
                        ray.tight
                    },
                });
            }
        }
        for (i, (p, dp)) in rays.iter().zip(&dots).enumerate() {
            if !dp.is_positive() {
                continue;
            }
            for (j, (n, dn)) in rays.iter().zip(&dots).enumerate() {
                if !dn.is_negative() {
                    continue;
                }
                let common = p.tight & n.tight;
                // Combinatorial adjacency: no third ray's tight set contains
                // the common tight set.
                let adjacent = rays.iter().enumerate().all(|(k, r)| {
                    k == i || k == j || r.tight & common != common
                });
                if !adjacent {
                    continue;
                }
                let mut w: Vec<Int> = p
                    .v
                    .iter()
                    .zip(&n.v)
                    .map(|(pv, nv)| dp * nv - dn * pv)
                    .collect();
                crate::linalg::make_primitive(&mut w);
                next.push(Ray {
                    v: w,
                    tight: common | (1 << t),
                });
            }
        }
        rays = next;
    }
    if !lineality.is_empty() {
        return Err(Error::NotPointed);
    }
    let mut out: Vec<Vec<Int>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The Rees cone RC(I) = cone(e_1,…,e_s, (v_1,1),…,(v_q,1)) over the
/// exponent vectors v_i of the minimal generators, with its irredundant
/// facet list (computed by double description and sorted lexicographically).
pub fn rees_cone(ideal: &MonomialIdeal) -> Result<IntCone, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let s = ideal.vars();
    let dim = s + 1;
    let mut generators: Vec<Vec<Int>> = (0..s)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::one();
            e
        })
        .collect();
    for g in ideal.gens() {
        let mut v: Vec<Int> = g.exponents().iter().map(|&e| Int::from(e)).collect();
        v.push(Int::one());
        generators.push(v);
    }
    let facets = dual_extreme_rays(&generators, dim)?;
    Ok(IntCone {
        dim,
        generators,
        facets,
    })
}

/// The lexicographically sorted facet normals of the Rees cone of I.
pub fn rees_cone_facets(ideal: &MonomialIdeal) -> Result<Vec<Vec<Int>>, Error> {
    Ok(rees_cone(ideal)?.facets)
}

/// Facets of the homogenization cone(e_1..e_s, primitive multiples of (v,1))
/// of a blocking-type polyhedron given by its vertex list. Used to rebuild an
/// H-representation from a computed vertex set.
pub fn blocking_hrep(ambient: usize, vertices: &[Vec<Rat>]) -> Result<Vec<Vec<Int>>, Error> {
    let dim = ambient + 1;
    let mut generators: Vec<Vec<Int>> = (0..ambient)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::one();
            e
        })
        .collect();
    for v in vertices {
        if v.len() != ambient {
            return Err(Error::DimensionMismatch(format!(
                "vertex has {} coordinates, ambient is {ambient}",
                v.len()
            )));
        }
        let mut h = v.clone();
        h.push(Rat::one());
        generators.push(primitive_integer(&h));
    }
    dual_extreme_rays(&generators, dim)
}
