//! Arity-3 calculator for quadratic presentations.
//!
//! The degree-3 component of the free operad on a generator space E is
//! spanned by sigma (x) (mu (x) nu) with sigma in {e, (13), (23)} and mu, nu
//! running over a basis of E; the transposition acts on the inner factor.
//! The basis element corresponds to the monomial mu(nu(x_s1, x_s2), x_s3).
//! This module computes coordinates of degree-3 polynomials in that basis,
//! spans of their symmetric-group orbits, orthogonal complements under the
//! sign-twisted pairing, and the dimension chain of the splitting of a
//! quadratic presentation against its dendriform dual.

use crate::error::Error;
use crate::linalg::Subspace;
use crate::successor::{phi_poly, phi_star_poly, Mode};
use crate::terms::{
    Monomial, OpFamily, OpSymbol, Permutation, Polynomial, Signature, VarSet,
};
use crate::varieties::VarietyPresentation;
use crate::Q;
use num_traits::{One, Zero};
use std::fmt;

/// A generator space with its transposition action (an involution).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpace {
    dim: usize,
    // Column j is the image of basis element j under the transposition.
    swap: Vec<Vec<Q>>,
}

impl GenSpace {
    pub fn new(dim: usize, swap: Vec<Vec<Q>>) -> GenSpace {
        assert_eq!(swap.len(), dim);
        GenSpace { dim, swap }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Free generator space on `nops` operations: basis is the plain
    /// generators followed by their transposes, which the swap exchanges.
    pub fn free(nops: usize) -> GenSpace {
        let dim = 2 * nops;
        let mut swap = vec![vec![Q::zero(); dim]; dim];
        for i in 0..nops {
            swap[nops + i][i] = Q::one();
            swap[i][nops + i] = Q::one();
        }
        GenSpace { dim, swap }
    }

    fn swap_column(&self, j: usize) -> Vec<(usize, Q)> {
        (0..self.dim)
            .filter(|&i| !self.swap[i][j].is_zero())
            .map(|i| (i, self.swap[i][j].clone()))
            .collect()
    }

    /// The dual space with the sign-twisted action: pairing the transpose on
    /// one side equals minus pairing the transpose on the other.
    pub fn dual(&self) -> GenSpace {
        let swap = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| -self.swap[j][i].clone()).collect())
            .collect();
        GenSpace {
            dim: self.dim,
            swap,
        }
    }

    /// The three-family splitting: basis (g, family) with the transposition
    /// acting by the base swap and the left/right flip.
    pub fn split(&self) -> GenSpace {
        let dim = 3 * self.dim;
        let mut swap = vec![vec![Q::zero(); dim]; dim];
        for j in 0..self.dim {
            for f in 0..3usize {
                let col = 3 * j + f;
                for (i, v) in self.swap_column(j) {
                    swap[3 * i + flip_family(f)][col] = v;
                }
            }
        }
        GenSpace { dim, swap }
    }
}

fn family_slot(f: OpFamily) -> Option<usize> {
    match f {
        OpFamily::Left => Some(0),
        OpFamily::Right => Some(1),
        OpFamily::Middle => Some(2),
        OpFamily::Base => None,
    }
}

fn flip_family(f: usize) -> usize {
    match f {
        0 => 1,
        1 => 0,
        _ => 2,
    }
}

/// Whether node labels index the generator space directly (unsplit) or
/// through the three families (split).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Base,
    Split,
}

/// The degree-3 coordinate space over a generator space.
#[derive(Clone, Debug)]
pub struct Arity3Space {
    pub gens: GenSpace,
    pub level: Level,
}

// Images of 1,2,3 under the coset representatives e, (13), (23).
const COSET_REPS: [[usize; 3]; 3] = [[1, 2, 3], [3, 2, 1], [1, 3, 2]];

impl Arity3Space {
    pub fn base(gens: GenSpace) -> Arity3Space {
        Arity3Space {
            gens,
            level: Level::Base,
        }
    }

    pub fn split(gens: GenSpace) -> Arity3Space {
        Arity3Space {
            gens: gens.split(),
            level: Level::Split,
        }
    }

    /// Free space over an operation alphabet without degree-2 relations.
    pub fn free_base(nops: usize) -> Arity3Space {
        Arity3Space::base(GenSpace::free(nops))
    }

    pub fn dim(&self) -> usize {
        3 * self.gens.dim * self.gens.dim
    }

    fn flat_op(&self, op: OpSymbol) -> Result<usize, Error> {
        let idx = op.index - 1;
        match self.level {
            Level::Base => {
                if op.family != OpFamily::Base || idx >= self.gens.dim {
                    return Err(Error::invalid(format!("operation {op} outside generator space")));
                }
                Ok(idx)
            }
            Level::Split => {
                let slot = family_slot(op.family)
                    .ok_or_else(|| Error::invalid("split coordinates need split operations"))?;
                if 3 * idx + slot >= self.gens.dim {
                    return Err(Error::invalid(format!("operation {op} outside generator space")));
                }
                Ok(3 * idx + slot)
            }
        }
    }

    fn gen_vector(&self, flat: usize, swapped: bool) -> Vec<(usize, Q)> {
        if swapped {
            self.gens.swap_column(flat)
        } else {
            vec![(flat, Q::one())]
        }
    }

    /// Coordinates of a polylinear degree-3 polynomial.
    pub fn coords(&self, p: &Polynomial) -> Result<Vec<Q>, Error> {
        let m = self.gens.dim;
        let mut out = vec![Q::zero(); self.dim()];
        for (mono, coeff) in p.iter() {
            if mono.degree() != 3 || !mono.is_polylinear() {
                return Err(Error::invalid(format!(
                    "expected a polylinear degree-3 monomial, got {mono}"
                )));
            }
            // Decompose into outer/inner labels and the variable order.
            let (outer, outer_swapped, inner, vars) = match mono {
                Monomial::Node(op_out, l, r) => match (&**l, &**r) {
                    (Monomial::Node(op_in, a, b), Monomial::Leaf(c)) => {
                        let (Monomial::Leaf(a), Monomial::Leaf(b)) = (&**a, &**b) else {
                            return Err(Error::invalid("not a degree-3 tree"));
                        };
                        (*op_out, false, *op_in, [*a, *b, *c])
                    }
                    (Monomial::Leaf(a), Monomial::Node(op_in, b, c)) => {
                        let (Monomial::Leaf(b), Monomial::Leaf(c)) = (&**b, &**c) else {
                            return Err(Error::invalid("not a degree-3 tree"));
                        };
                        (*op_out, true, *op_in, [*b, *c, *a])
                    }
                    _ => return Err(Error::invalid("not a degree-3 tree")),
                },
                Monomial::Leaf(_) => unreachable!("degree checked above"),
            };
            let mut images = vars;
            let mut inner_swapped = false;
            let rho = if let Some(r) = COSET_REPS.iter().position(|r| *r == images) {
                r
            } else {
                images.swap(0, 1);
                inner_swapped = true;
                COSET_REPS
                    .iter()
                    .position(|r| *r == images)
                    .expect("coset decomposition")
            };
            let outer_vec = self.gen_vector(self.flat_op(outer)?, outer_swapped);
            let inner_vec = self.gen_vector(self.flat_op(inner)?, inner_swapped);
            for (oi, ov) in &outer_vec {
                for (ii, iv) in &inner_vec {
                    let k = rho * m * m + oi * m + ii;
                    out[k] = &out[k] + &(coeff * &(ov * iv));
                }
            }
        }
        Ok(out)
    }

    /// The monomial realization of a coordinate basis element, over the
    /// formal alphabet whose operation i is the i-th generator.
    pub fn basis_monomial(&self, rho: usize, outer: usize, inner: usize) -> Monomial {
        assert_eq!(self.level, Level::Base, "monomials live at the base level");
        let images = COSET_REPS[rho];
        Monomial::node(
            OpSymbol::base(outer + 1),
            Monomial::node(
                OpSymbol::base(inner + 1),
                Monomial::leaf(images[0]),
                Monomial::leaf(images[1]),
            ),
            Monomial::leaf(images[2]),
        )
    }

    /// Reads a coordinate vector back as a polynomial over the formal
    /// alphabet (base level only).
    pub fn polynomial_from_coords(&self, v: &[Q]) -> Polynomial {
        let m = self.gens.dim;
        let sig = Signature::omega(m);
        let mut out = Polynomial::zero(sig);
        for rho in 0..3 {
            for a in 0..m {
                for b in 0..m {
                    let c = &v[rho * m * m + a * m + b];
                    if !c.is_zero() {
                        out.add_term(self.basis_monomial(rho, a, b), c.clone());
                    }
                }
            }
        }
        out
    }
}

/// Sign convention of the pairing between a degree-3 space and its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingSign {
    /// Weight -1 on the two non-identity coset representatives.
    SgnTwisted,
    /// Weight +1 everywhere.
    Plain,
}

/// Calibrated default: the convention under which the associative case
/// reproduces the known duality between the splitting and its dendriform
/// counterpart (see the calibration test).
pub const DEFAULT_PAIRING: PairingSign = PairingSign::SgnTwisted;

fn pairing_weight(sign: PairingSign, rho: usize) -> Q {
    match (sign, rho) {
        (PairingSign::SgnTwisted, 1 | 2) => -Q::one(),
        _ => Q::one(),
    }
}

/// The span of the symmetric-group orbit of the generators.
pub fn s3_span(generators: &[Polynomial], space: &Arity3Space) -> Result<Subspace, Error> {
    let mut rows = Vec::new();
    for p in generators {
        if p.is_zero() {
            continue;
        }
        if p.polylinear_degree()? != 3 {
            return Err(Error::invalid("orbit span needs degree-3 generators"));
        }
        for sigma in Permutation::all(3) {
            rows.push(space.coords(&p.apply_permutation(&sigma)?)?);
        }
    }
    Ok(Subspace::from_rows(space.dim(), rows))
}

/// Orthogonal complement in the dual coordinate space under the chosen
/// pairing convention.
pub fn orthogonal_complement(sub: &Subspace, sign: PairingSign) -> Subspace {
    let n = sub.ambient_dim();
    let m2 = n / 3;
    let scaled: Vec<Vec<Q>> = sub
        .basis()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(k, v)| v * &pairing_weight(sign, k / m2))
                .collect()
        })
        .collect();
    Subspace::from_rows(n, scaled).kernel()
}

/// A quadratic presentation split into its degree-2 data (folded into the
/// generator space) and its degree-3 relations.
#[derive(Clone, Debug)]
pub struct QuadraticPresentation {
    pub name: String,
    pub nops: usize,
    pub gens: GenSpace,
    pub degree3: Vec<Polynomial>,
}

impl QuadraticPresentation {
    /// Folds the degree-2 identities of a presentation into the generator
    /// space. They must solve some transposed generators in terms of the
    /// plain ones (plain generators stay independent).
    #[allow(clippy::needless_range_loop)] // column-major writes into `swap`
    pub fn from_variety(v: &VarietyPresentation) -> Result<QuadraticPresentation, Error> {
        let k = v.nops;
        let mut deg2_rows: Vec<Vec<Q>> = Vec::new();
        let mut degree3 = Vec::new();
        for id in &v.identities {
            match id.poly.polylinear_degree()? {
                2 => {
                    // Columns: transposed generators first, then plain.
                    let mut row = vec![Q::zero(); 2 * k];
                    for (m, c) in id.poly.iter() {
                        let Monomial::Node(op, l, r) = m else {
                            return Err(Error::invalid("degree-2 identity with a leaf term"));
                        };
                        match (&**l, &**r) {
                            (Monomial::Leaf(1), Monomial::Leaf(2)) => {
                                row[k + op.index - 1] = &row[k + op.index - 1] + c;
                            }
                            (Monomial::Leaf(2), Monomial::Leaf(1)) => {
                                row[op.index - 1] = &row[op.index - 1] + c;
                            }
                            _ => return Err(Error::invalid("bad degree-2 identity")),
                        }
                    }
                    deg2_rows.push(row);
                }
                3 => degree3.push(id.poly.clone()),
                n => {
                    return Err(Error::invalid(format!(
                        "presentation is not quadratic: identity `{}` has degree {n}",
                        id.id
                    )))
                }
            }
        }
        let relations = Subspace::from_rows(2 * k, deg2_rows);
        for (&pivot, row) in relations.pivots().iter().zip(relations.basis()) {
            if pivot >= k {
                return Err(Error::invalid(
                    "degree-2 identities make the plain generators dependent",
                ));
            }
            for (c, v) in row.iter().enumerate() {
                if c != pivot && c < k && !v.is_zero() {
                    return Err(Error::invalid(
                        "degree-2 identities do not solve single transposed generators",
                    ));
                }
            }
        }
        // Basis of E: plain generators, then unresolved transposed ones.
        let resolved: Vec<usize> = relations.pivots().to_vec();
        let unresolved: Vec<usize> = (0..k).filter(|i| !resolved.contains(i)).collect();
        let dim = 2 * k - resolved.len();
        let mut swap = vec![vec![Q::zero(); dim]; dim];
        // Image of plain generator i: its transpose, resolved or kept.
        for i in 0..k {
            if let Some(pos) = resolved.iter().position(|&p| p == i) {
                let row = &relations.basis()[pos];
                // transposed_i = -sum_c row[k + c] plain_c.
                for (c, coeff) in row[k..2 * k].iter().enumerate() {
                    if !coeff.is_zero() {
                        swap[c][i] = -coeff.clone();
                    }
                }
            } else {
                let pos = unresolved.iter().position(|&u| u == i).unwrap();
                swap[k + pos][i] = Q::one();
            }
        }
        // Image of a kept transposed generator: the plain one.
        for (pos, &i) in unresolved.iter().enumerate() {
            swap[i][k + pos] = Q::one();
        }
        Ok(QuadraticPresentation {
            name: v.name.clone(),
            nops: k,
            gens: GenSpace::new(dim, swap),
            degree3,
        })
    }

    pub fn generator_dim(&self) -> usize {
        self.gens.dim()
    }

    /// Reinterprets a polynomial over the variety's signature as one over
    /// the generator alphabet (plain generators come first, so indices map
    /// one to one).
    fn widen(&self, p: &Polynomial) -> Result<Polynomial, Error> {
        p.cast(Signature::omega(self.gens.dim()))
    }
}

/// One row of the dimension report.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

/// Outcome of the arity-3 dimension and orthogonality checks.
#[derive(Clone, Debug)]
pub struct KoszulReport {
    pub variety: String,
    pub generator_dim: usize,
    pub dim_relations: usize,
    pub dim_zero_module: usize,
    pub dim_split_relations: usize,
    pub dim_dual_star: usize,
    pub orthogonality: bool,
    pub rows: Vec<ReportRow>,
}

impl KoszulReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

impl fmt::Display for KoszulReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "variety: {}", self.variety)?;
        writeln!(f, "{:<28} {:>10} {:>10}  match", "quantity", "expected", "computed")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<28} {:>10} {:>10}  {}",
                r.quantity,
                r.expected,
                r.computed,
                if r.ok { "yes" } else { "NO" }
            )?;
        }
        Ok(())
    }
}

/// Verifies the dimension chain and the orthogonality statement of the
/// three-operation splitting of a quadratic presentation.
pub fn verify_koszul_tri(v: &VarietyPresentation) -> Result<KoszulReport, Error> {
    verify_koszul_tri_with(v, DEFAULT_PAIRING)
}

pub fn verify_koszul_tri_with(
    v: &VarietyPresentation,
    sign: PairingSign,
) -> Result<KoszulReport, Error> {
    let pres = QuadraticPresentation::from_variety(v)?;
    let n = pres.generator_dim();
    let base = Arity3Space::base(pres.gens.clone());
    let split = Arity3Space::split(pres.gens.clone());
    let dual_base = Arity3Space::base(pres.gens.dual());
    let dual_split = Arity3Space::split(pres.gens.dual());

    // R: the orbit span of the degree-3 relations.
    let widened: Vec<Polynomial> = pres
        .degree3
        .iter()
        .map(|p| pres.widen(p))
        .collect::<Result<_, _>>()?;
    let r = s3_span(&widened, &base)?;
    let dim_r = r.dim();

    // The zero-identity module of the splitting.
    let zero_polys: Vec<Polynomial> = crate::successor::generate_zero_identities(pres.nops, Mode::Tri)
        .into_iter()
        .map(|z| z.poly.cast(Signature::omega3(pres.gens.dim())))
        .collect::<Result<_, _>>()?;
    let zero_module = s3_span(&zero_polys, &split)?;

    // The split relation module: zero identities plus all splittings of the
    // degree-3 relations.
    let mut split_gens = zero_polys.clone();
    for p in &widened {
        for h in VarSet::nonempty_subsets(3) {
            split_gens.push(phi_poly(p, h)?);
        }
    }
    let r3 = s3_span(&split_gens, &split)?;

    // Dual side: complement of R, starred splittings of its basis.
    let r_perp = orthogonal_complement(&r, sign);
    let mut star_gens = Vec::new();
    for row in r_perp.basis() {
        let g = dual_base.polynomial_from_coords(row);
        for h in VarSet::nonempty_subsets(3) {
            star_gens.push(phi_star_poly(&g, h, Mode::Tri)?);
        }
    }
    let perp_star = s3_span(&star_gens, &dual_split)?;
    let r3_perp = orthogonal_complement(&r3, sign);
    let orthogonality = perp_star == r3_perp;

    let mut rows = Vec::new();
    let mut push = |q: &str, expected: usize, computed: usize| {
        rows.push(ReportRow {
            quantity: q.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            ok: expected == computed,
        });
    };
    push("dim F(3)", 3 * n * n, base.dim());
    push("dim O(3)", 6 * n * n, zero_module.dim());
    push("dim R(3)", 6 * n * n + 7 * dim_r, r3.dim());
    push("dim (R^perp)(3*)", 21 * n * n - 7 * dim_r, perp_star.dim());
    push(
        "dim R(3) + dim (R^perp)(3*)",
        27 * n * n,
        r3.dim() + perp_star.dim(),
    );
    rows.push(ReportRow {
        quantity: "(R^perp)(3*) = R(3)^perp".to_string(),
        expected: "equal".to_string(),
        computed: if orthogonality { "equal" } else { "different" }.to_string(),
        ok: orthogonality,
    });
    Ok(KoszulReport {
        variety: v.name.clone(),
        generator_dim: n,
        dim_relations: dim_r,
        dim_zero_module: zero_module.dim(),
        dim_split_relations: r3.dim(),
        dim_dual_star: perp_star.dim(),
        orthogonality,
        rows,
    })
}
