//! Sparse multivariate (Laurent) polynomials over `F_{p^e}` with weighted
//! gradings, degreewise bases of graded subalgebras and ideals, and exact
//! membership tests.
//!
//! Monomials are exponent vectors. The monomial order is graded
//! lexicographic: weighted degree first, then the exponent vectors compared
//! lexicographically with variable 0 most significant. Inside a single
//! homogeneous piece this is plain lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Subspace;

pub type Monomial = Vec<i32>;

/// Default bound on the number of generator products enumerated per piece.
pub const DEFAULT_TERM_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    weights: Vec<i64>,
}

impl Grading {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.iter().any(|&w| w < 1) {
            return Err(Error::InvalidInput("grading weights must be >= 1".into()));
        }
        Ok(Grading { weights })
    }

    /// All weights equal to one.
    pub fn standard(nvars: usize) -> Self {
        Grading {
            weights: vec![1; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn degree(&self, m: &[i32]) -> Result<i64> {
        weighted_degree(m, self)
    }

    fn degree_unchecked(&self, m: &[i32]) -> i64 {
        m.iter().zip(&self.weights).map(|(&e, &w)| e as i64 * w).sum()
    }
}

pub fn weighted_degree(m: &[i32], g: &Grading) -> Result<i64> {
    if m.len() != g.nvars() {
        return Err(Error::DimensionMismatch {
            expected: g.nvars(),
            got: m.len(),
        });
    }
    Ok(g.degree_unchecked(m))
}

/// Graded lexicographic comparison of two monomials.
pub fn grlex_cmp(g: &Grading, a: &[i32], b: &[i32]) -> Ordering {
    g.degree_unchecked(a)
        .cmp(&g.degree_unchecked(b))
        .then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    field: Field,
    grading: Grading,
    terms: BTreeMap<Monomial, Fe>,
}

impl GradedPoly {
    pub fn zero(field: &Field, grading: &Grading) -> Self {
        GradedPoly {
            field: field.clone(),
            grading: grading.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, grading: &Grading, c: Fe) -> Self {
        GradedPoly::monomial(field, grading, vec![0; grading.nvars()], c)
    }

    pub fn one(field: &Field, grading: &Grading) -> Self {
        GradedPoly::constant(field, grading, Fe::ONE)
    }

    pub fn monomial(field: &Field, grading: &Grading, exps: Monomial, c: Fe) -> Self {
        assert_eq!(exps.len(), grading.nvars(), "monomial length");
        let mut p = GradedPoly::zero(field, grading);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(field: &Field, grading: &Grading, i: usize) -> Self {
        let mut e = vec![0; grading.nvars()];
        e[i] = 1;
        GradedPoly::monomial(field, grading, e, Fe::ONE)
    }

    pub fn from_terms(field: &Field, grading: &Grading, terms: impl IntoIterator<Item = (Monomial, Fe)>) -> Self {
        let mut p = GradedPoly::zero(field, grading);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Parses expressions such as `u^3 + 2*v^-1*w - x`. Integer coefficients
    /// are reduced into the prime field.
    pub fn parse(field: &Field, grading: &Grading, vars: &[&str], src: &str) -> Result<Self> {
        if vars.len() != grading.nvars() {
            return Err(Error::DimensionMismatch {
                expected: grading.nvars(),
                got: vars.len(),
            });
        }
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::InvalidInput(format!("cannot parse polynomial `{src}`: {msg}"));
        let mut out = GradedPoly::zero(field, grading);
        let chars: Vec<char> = s.chars().collect();
        let mut start = 0;
        let mut pieces = Vec::new();
        for i in 0..=chars.len() {
            let boundary = i == chars.len()
                || ((chars[i] == '+' || chars[i] == '-') && i > 0 && chars[i - 1] != '^');
            if boundary {
                pieces.push(chars[start..i].iter().collect::<String>());
                start = i;
            }
        }
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1i64, rest.to_string()),
                None => (1, piece.trim_start_matches('+').to_string()),
            };
            if body.is_empty() {
                if sign == -1 {
                    return Err(bad("dangling sign"));
                }
                continue;
            }
            let mut coeff = sign;
            let mut exps = vec![0i32; vars.len()];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if let Ok(n) = factor.parse::<i64>() {
                    coeff *= n;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                let idx = vars.iter().position(|&v| v == name).ok_or_else(|| bad("unknown variable"))?;
                exps[idx] += e;
            }
            out.add_term(exps, field.from_int(coeff));
        }
        Ok(out)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn nvars(&self) -> usize {
        self.grading.nvars()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Fe> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[i32]) -> Fe {
        self.terms.get(m).copied().unwrap_or(Fe::ZERO)
    }

    pub fn add_term(&mut self, m: Monomial, c: Fe) {
        assert_eq!(m.len(), self.nvars(), "monomial length");
        if c.is_zero() {
            return;
        }
        let f = &self.field;
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = f.add(*x, c);
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> GradedPoly {
        let f = &self.field;
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = f.neg(*c);
        }
        out
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Fe) -> GradedPoly {
        let f = &self.field;
        if c.is_zero() {
            return GradedPoly::zero(f, &self.grading);
        }
        let mut out = self.clone();
        for x in out.terms.values_mut() {
            *x = f.mul(*x, c);
        }
        out
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        let f = &self.field;
        let mut acc: BTreeMap<Monomial, Fe> = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                let c = f.mul(ca, cb);
                let e = acc.entry(m).or_insert(Fe::ZERO);
                *e = f.add(*e, c);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        GradedPoly {
            field: f.clone(),
            grading: self.grading.clone(),
            terms: acc,
        }
    }

    pub fn mul_monomial(&self, m: &[i32], c: Fe) -> GradedPoly {
        let f = &self.field;
        let mut out = GradedPoly::zero(f, &self.grading);
        if c.is_zero() {
            return out;
        }
        for (mm, &cc) in &self.terms {
            let e: Monomial = mm.iter().zip(m).map(|(a, b)| a + b).collect();
            out.terms.insert(e, f.mul(cc, c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> GradedPoly {
        let mut result = GradedPoly::one(&self.field, &self.grading);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `self^{p^k}`, computed termwise (valid in characteristic `p`).
    pub fn frobenius_power(&self, k: u32) -> GradedPoly {
        let f = &self.field;
        let q = (f.p() as i64).pow(k) as i32;
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| (m.iter().map(|e| e * q).collect(), f.frobenius(c, k)))
            .collect();
        GradedPoly {
            field: f.clone(),
            grading: self.grading.clone(),
            terms,
        }
    }

    pub fn derivative(&self, var: usize) -> GradedPoly {
        let f = &self.field;
        let mut out = GradedPoly::zero(f, &self.grading);
        for (m, &c) in &self.terms {
            let e = m[var];
            if e == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm[var] -= 1;
            out.add_term(mm, f.mul(c, f.from_int(e as i64)));
        }
        out
    }

    /// Substitutes `polys[i]` for variable `i`; exponents must be non-negative.
    pub fn substitute(&self, polys: &[GradedPoly]) -> GradedPoly {
        assert_eq!(polys.len(), self.nvars());
        let target = &polys[0];
        let mut out = GradedPoly::zero(&self.field, target.grading());
        for (m, &c) in &self.terms {
            let mut t = GradedPoly::constant(&self.field, target.grading(), c);
            for (i, &e) in m.iter().enumerate() {
                assert!(e >= 0, "substitution needs polynomial exponents");
                if e > 0 {
                    t = t.mul(&polys[i].pow(e as u32));
                }
            }
            out = out.add(&t);
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e >= 0))
    }

    /// The common weighted degree of all terms, or `NotHomogeneous`. The zero
    /// polynomial is not assigned a degree.
    pub fn homogeneous_degree(&self) -> Result<i64> {
        let mut degs = self.terms.keys().map(|m| self.grading.degree_unchecked(m));
        let Some(d) = degs.next() else {
            return Err(Error::NotHomogeneous);
        };
        if degs.all(|e| e == d) {
            Ok(d)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_ok()
    }

    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m[var]).max()
    }

    /// Terms in decreasing graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, Fe)> {
        let mut v: Vec<(&Monomial, Fe)> = self.terms.iter().map(|(m, &c)| (m, c)).collect();
        v.sort_by(|a, b| grlex_cmp(&self.grading, b.0, a.0));
        v
    }

    pub fn format(&self, vars: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let mut factors = Vec::new();
                if c != Fe::ONE || m.iter().all(|&e| e == 0) {
                    let s = self.field.format(c);
                    factors.push(if s.contains('+') { format!("({s})") } else { s });
                }
                for (i, &e) in m.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(vars[i].to_string()),
                        _ => factors.push(format!("{}^{}", vars[i], e)),
                    }
                }
                factors.join("*")
            })
            .collect();
        parts.join(" + ")
    }
}

/// A basis of one homogeneous piece, row reduced against the graded
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct PieceBasis {
    degree: i64,
    field: Field,
    grading: Grading,
    /// Column monomials in decreasing order.
    monomials: Vec<Monomial>,
    echelon: Subspace,
}

impl PieceBasis {
    fn from_polys(field: &Field, grading: &Grading, degree: i64, polys: &[GradedPoly]) -> Self {
        let mut monos: Vec<Monomial> = polys.iter().flat_map(|p| p.terms.keys().cloned()).collect();
        monos.sort_by(|a, b| grlex_cmp(grading, b, a));
        monos.dedup();
        let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut echelon = Subspace::zero(field, monos.len());
        for p in polys {
            let mut v = vec![Fe::ZERO; monos.len()];
            for (m, &c) in &p.terms {
                v[index[m]] = c;
            }
            echelon.insert(&v);
        }
        PieceBasis {
            degree,
            field: field.clone(),
            grading: grading.clone(),
            monomials: monos,
            echelon,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.echelon.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> Vec<GradedPoly> {
        self.echelon
            .basis()
            .iter()
            .map(|row| self.poly_from_vector(row))
            .collect()
    }

    fn poly_from_vector(&self, v: &[Fe]) -> GradedPoly {
        GradedPoly::from_terms(
            &self.field,
            &self.grading,
            self.monomials.iter().cloned().zip(v.iter().copied()),
        )
    }

    fn vector_of(&self, f: &GradedPoly) -> Option<Vec<Fe>> {
        let mut v = vec![Fe::ZERO; self.monomials.len()];
        for (m, &c) in f.terms() {
            let i = self.monomials.iter().position(|x| x == m)?;
            v[i] = c;
        }
        Some(v)
    }
}

fn check_homogeneous_positive(gens: &[GradedPoly]) -> Result<Vec<i64>> {
    gens.iter()
        .map(|g| {
            let d = g.homogeneous_degree()?;
            if d <= 0 {
                return Err(Error::InvalidInput("generators must have positive degree".into()));
            }
            Ok(d)
        })
        .collect()
}

/// Degree-`d` piece of the unital subalgebra generated by `gens`, spanned by
/// all generator products of total degree `d`.
pub fn subalgebra_piece_basis(gens: &[GradedPoly], d: i64) -> Result<PieceBasis> {
    subalgebra_piece_basis_with_budget(gens, d, DEFAULT_TERM_BUDGET)
}

pub fn subalgebra_piece_basis_with_budget(gens: &[GradedPoly], d: i64, budget: u64) -> Result<PieceBasis> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidInput("no generators".into()));
    };
    let (field, grading) = (first.field.clone(), first.grading.clone());
    let degs = check_homogeneous_positive(gens)?;
    let mut products = Vec::new();
    if d >= 0 {
        let mut count = 0u64;
        let mut current = GradedPoly::one(&field, &grading);
        enumerate_products(gens, &degs, 0, d, &mut current, &mut products, &mut count, budget)?;
    }
    Ok(PieceBasis::from_polys(&field, &grading, d, &products))
}

#[allow(clippy::too_many_arguments)]
fn enumerate_products(
    gens: &[GradedPoly],
    degs: &[i64],
    start: usize,
    remaining: i64,
    current: &mut GradedPoly,
    out: &mut Vec<GradedPoly>,
    count: &mut u64,
    budget: u64,
) -> Result<()> {
    if remaining == 0 {
        *count += 1;
        if *count > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        out.push(current.clone());
        return Ok(());
    }
    for i in start..gens.len() {
        if degs[i] <= remaining {
            let saved = current.clone();
            *current = current.mul(&gens[i]);
            enumerate_products(gens, degs, i, remaining - degs[i], current, out, count, budget)?;
            *current = saved;
        }
    }
    Ok(())
}

/// Degree-`d` piece of the ideal generated by `ideal_gens` inside the
/// subalgebra generated by `algebra_gens`.
pub fn ideal_piece_in_subalgebra(ideal_gens: &[GradedPoly], algebra_gens: &[GradedPoly], d: i64) -> Result<PieceBasis> {
    let Some(first) = ideal_gens.first().or(algebra_gens.first()) else {
        return Err(Error::InvalidInput("no generators".into()));
    };
    let (field, grading) = (first.field.clone(), first.grading.clone());
    let mut products = Vec::new();
    for g in ideal_gens {
        let e = g.homogeneous_degree()?;
        if e > d {
            continue;
        }
        let piece = subalgebra_piece_basis(algebra_gens, d - e)?;
        for r in piece.basis() {
            products.push(g.mul(&r));
        }
    }
    Ok(PieceBasis::from_polys(&field, &grading, d, &products))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Coordinates with respect to [`PieceBasis::basis`] when `member`.
    pub coords: Option<Vec<Fe>>,
}

/// Exact test of whether `f` lies in the span of `space`.
pub fn membership(f: &GradedPoly, space: &PieceBasis) -> Result<Membership> {
    if !f.is_zero() {
        let d = f.homogeneous_degree()?;
        if d != space.degree {
            return Err(Error::DegreeMismatch {
                expected: space.degree,
                got: d,
            });
        }
    }
    let Some(v) = space.vector_of(f) else {
        return Ok(Membership {
            member: false,
            coords: None,
        });
    };
    let coords = space.echelon.coords(&v);
    Ok(Membership {
        member: coords.is_some(),
        coords,
    })
}

/// Reconstructs `sum coords[i] * basis[i]`.
pub fn combination(space: &PieceBasis, coords: &[Fe]) -> GradedPoly {
    let mut out = GradedPoly::zero(&space.field, &space.grading);
    for (b, &c) in space.basis().iter().zip(coords) {
        out = out.add(&b.scale(c));
    }
    out
}

/// Remainder of `f` on division by `h`, where `h` is monic in `var`: the
/// result has degree below `deg_var(h)` in `var`.
pub fn normal_form_hypersurface(f: &GradedPoly, h: &GradedPoly, var: usize) -> Result<GradedPoly> {
    let k = h.degree_in(var).filter(|&k| k > 0).ok_or(Error::NotMonicInVariable(var))?;
    let mut lead = vec![0; h.nvars()];
    lead[var] = k;
    let top: Vec<_> = h.terms.iter().filter(|(m, _)| m[var] == k).collect();
    if top.len() != 1 || top[0].0 != &lead || *top[0].1 != Fe::ONE {
        return Err(Error::NotMonicInVariable(var));
    }
    let tail = h.sub(&GradedPoly::monomial(&h.field, &h.grading, lead, Fe::ONE)).neg();
    let mut work = f.clone();
    loop {
        let Some((m, c)) = work
            .terms
            .iter()
            .filter(|(m, _)| m[var] >= k)
            .max_by_key(|(m, _)| m[var])
            .map(|(m, &c)| (m.clone(), c))
        else {
            return Ok(work);
        };
        work.terms.remove(&m);
        let mut shift = m.clone();
        shift[var] -= k;
        work = work.add(&tail.mul_monomial(&shift, c));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(p: u32) -> (Field, Grading) {
        (Field::prime(p).unwrap(), Grading::standard(2))
    }

    fn uv(f: &Field, g: &Grading, s: &str) -> GradedPoly {
        GradedPoly::parse(f, g, &["u", "v"], s).unwrap()
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!(weighted_degree(&[2, 0, 1], &Grading::standard(3)), Ok(3));
        assert_eq!(weighted_degree(&[3, 0], &Grading::new(vec![2, 3]).unwrap()), Ok(6));
        assert!(matches!(
            weighted_degree(&[1, 1], &Grading::new(vec![2]).unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(Grading::new(vec![1, 0]).is_err());
    }

    #[test]
    fn hochster_subalgebra_pieces() {
        let (f, g) = setup(2);
        let gens = [uv(&f, &g, "u^2"), uv(&f, &g, "v^2"), uv(&f, &g, "u^3+v^3")];
        let b3 = subalgebra_piece_basis(&gens, 3).unwrap();
        assert_eq!(b3.basis(), vec![uv(&f, &g, "u^3+v^3")]);
        assert!(subalgebra_piece_basis(&gens, 1).unwrap().is_empty());
        let x = [uv(&f, &g, "u")];
        assert_eq!(subalgebra_piece_basis(&x, 2).unwrap().basis(), vec![uv(&f, &g, "u^2")]);
        assert_eq!(subalgebra_piece_basis(&x, 0).unwrap().dim(), 1);
    }

    #[test]
    fn hochster_ideal_pieces() {
        let (f, g) = setup(2);
        let gens = [uv(&f, &g, "u^2"), uv(&f, &g, "v^2"), uv(&f, &g, "u^3+v^3")];
        let ideal = [uv(&f, &g, "u^2"), uv(&f, &g, "v^2")];
        let i3 = ideal_piece_in_subalgebra(&ideal, &gens, 3).unwrap();
        assert!(i3.is_empty());
        let m = membership(&uv(&f, &g, "u^3+v^3"), &i3).unwrap();
        assert!(!m.member);
        let i4 = ideal_piece_in_subalgebra(&ideal, &gens, 4).unwrap();
        assert_eq!(i4.dim(), 3);
        let m4 = membership(&uv(&f, &g, "u^4"), &i4).unwrap();
        assert!(m4.member);
        assert_eq!(combination(&i4, m4.coords.as_ref().unwrap()), uv(&f, &g, "u^4"));
        let i5 = ideal_piece_in_subalgebra(&ideal, &gens, 5).unwrap();
        assert_eq!(i5.dim(), 2);
        assert!(membership(&uv(&f, &g, "u^5+u^2*v^3"), &i5).unwrap().member);
        assert!(matches!(
            membership(&uv(&f, &g, "u^4"), &i5),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn char3_family_instance() {
        let (f, g) = setup(3);
        let gens = [uv(&f, &g, "u^3"), uv(&f, &g, "v^3"), uv(&f, &g, "u^4+v^4")];
        let ideal = [uv(&f, &g, "u^3"), uv(&f, &g, "v^3")];
        let i4 = ideal_piece_in_subalgebra(&ideal, &gens, 4).unwrap();
        assert!(!membership(&uv(&f, &g, "u^4+v^4"), &i4).unwrap().member);
    }

    #[test]
    fn budget_is_enforced() {
        let (f, g) = setup(2);
        let gens = [uv(&f, &g, "u"), uv(&f, &g, "v")];
        assert_eq!(
            subalgebra_piece_basis_with_budget(&gens, 10, 5).unwrap_err(),
            Error::BudgetExceeded { budget: 5 }
        );
    }

    #[test]
    fn normal_form_examples() {
        let f = Field::prime(2).unwrap();
        let g = Grading::standard(3);
        let vars = ["x", "y", "z"];
        let p = |s: &str| GradedPoly::parse(&f, &g, &vars, s).unwrap();
        let h = p("z^2 + x^3 + y^3");
        let nf = normal_form_hypersurface(&p("z^4"), &h, 2).unwrap();
        assert_eq!(nf, p("x^3+y^3").pow(2));
        assert_eq!(normal_form_hypersurface(&p("x"), &h, 2).unwrap(), p("x"));
        assert_eq!(
            normal_form_hypersurface(&p("x"), &p("x*z + 1"), 2).unwrap_err(),
            Error::NotMonicInVariable(2)
        );
    }

    #[test]
    fn parse_and_format() {
        let (f, g) = setup(5);
        let p = uv(&f, &g, "3*u^2*v^-1 - v + 7");
        assert_eq!(p.coeff(&[0, 1]), Fe(4));
        assert_eq!(p.coeff(&[0, 0]), Fe(2));
        assert_eq!(p.format(&["u", "v"]), "3*u^2*v^-1 + 4*v + 2");
        assert!(GradedPoly::parse(&f, &g, &["u", "v"], "w").is_err());
    }
}
