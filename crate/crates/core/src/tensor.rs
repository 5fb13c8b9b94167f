//! Sparse alternating and symmetric tensors over Gaussian rationals.
//!
//! Conventions, fixed once and used everywhere:
//!
//! * `AltTensor` stores coefficients against strictly increasing index
//!   tuples; inserting a permuted tuple folds in the permutation sign.
//! * `SymTensor` stores coefficients against non-decreasing index tuples
//!   with **no multinomial normalization**, so a `SymTensor` of degree `d`
//!   is literally a polynomial in the coordinate variables and `sym_mul`
//!   is polynomial multiplication.  Evaluation and word expansion carry
//!   the combinatorial factors explicitly.
//! * A symmetric monomial expands into tensor words as the sum over its
//!   **distinct** permutations with the monomial's coefficient (so `x∘y`
//!   becomes `x⊗y + y⊗x` and `x∘x` becomes `x⊗x`).  The shuffle map
//!   `μ: Λⁿ(SᵐV) → Sᵐ(ΛⁿV)` expands every slot into words, regroups the
//!   words column-wise into wedges, and collapses the resulting symmetric
//!   word tensor back to monomials.

use std::collections::BTreeMap;

use crate::scalar::Scalar;
use crate::Error;

/// Enumeration of the monomial basis of `SᵐV` (non-decreasing m-tuples).
#[derive(Clone, Debug)]
pub struct SymBasis {
    pub dim: usize,
    pub degree: usize,
    pub monomials: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, u32>,
}

/// Enumeration of the basis of `ΛⁿV` (strictly increasing n-tuples).
#[derive(Clone, Debug)]
pub struct AltBasis {
    pub dim: usize,
    pub degree: usize,
    pub tuples: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, u32>,
}

fn enumerate_tuples(dim: usize, degree: usize, strict: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(degree);
    fn rec(dim: u32, degree: usize, strict: bool, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == degree {
            out.push(cur.clone());
            return;
        }
        for v in start..dim {
            cur.push(v);
            rec(dim, degree, strict, if strict { v + 1 } else { v }, cur, out);
            cur.pop();
        }
    }
    rec(dim as u32, degree, strict, 0, &mut cur, &mut out);
    out
}

impl SymBasis {
    pub fn new(dim: usize, degree: usize) -> Self {
        let monomials = enumerate_tuples(dim, degree, false);
        let index = monomials.iter().cloned().zip(0..).collect();
        SymBasis { dim, degree, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, mono: &[u32]) -> Option<u32> {
        self.index.get(mono).copied()
    }
}

impl AltBasis {
    pub fn new(dim: usize, degree: usize) -> Self {
        let tuples = enumerate_tuples(dim, degree, true);
        let index = tuples.iter().cloned().zip(0..).collect();
        AltBasis { dim, degree, tuples, index }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn index_of(&self, tuple: &[u32]) -> Option<u32> {
        self.index.get(tuple).copied()
    }
}

/// Sort an index tuple, returning the permutation sign; `None` on repeats.
pub fn sort_with_sign(tuple: &[u32]) -> Option<(Vec<u32>, i8)> {
    let mut v = tuple.to_vec();
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

/// All distinct permutations of a non-decreasing tuple.
pub fn distinct_permutations(sorted: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    // classic next-permutation loop
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct AltTensor {
    pub degree: usize,
    pub dim: usize,
    pub coeffs: BTreeMap<Vec<u32>, Scalar>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymTensor {
    pub degree: usize,
    pub dim: usize,
    pub coeffs: BTreeMap<Vec<u32>, Scalar>,
}

impl std::fmt::Debug for AltTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Alt^{}[dim {}]{{", self.degree, self.dim)?;
        for (k, v) in &self.coeffs {
            write!(f, " {:?}: {},", k, v.render())?;
        }
        write!(f, " }}")
    }
}

impl std::fmt::Debug for SymTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sym^{}[dim {}]{{", self.degree, self.dim)?;
        for (k, v) in &self.coeffs {
            write!(f, " {:?}: {},", k, v.render())?;
        }
        write!(f, " }}")
    }
}

impl AltTensor {
    pub fn zero(dim: usize, degree: usize) -> Self {
        AltTensor { degree, dim, coeffs: BTreeMap::new() }
    }

    /// A degree-1 tensor from a coordinate vector.
    pub fn from_vector(coords: &[Scalar]) -> Self {
        let mut t = AltTensor::zero(coords.len(), 1);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                t.coeffs.insert(vec![i as u32], c.clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Add `coeff` against an arbitrary index tuple, folding in the sign.
    pub fn insert(&mut self, tuple: &[u32], coeff: Scalar) {
        assert_eq!(tuple.len(), self.degree);
        assert!(tuple.iter().all(|&i| (i as usize) < self.dim), "index out of range");
        if coeff.is_zero() {
            return;
        }
        let Some((sorted, sign)) = sort_with_sign(tuple) else {
            return;
        };
        let signed = if sign < 0 { -coeff } else { coeff };
        let entry = self.coeffs.entry(sorted).or_insert_with(Scalar::zero);
        *entry += signed;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return AltTensor::zero(self.dim, self.degree);
        }
        AltTensor {
            degree: self.degree,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    pub fn add(&self, rhs: &AltTensor) -> Result<AltTensor, Error> {
        if self.dim != rhs.dim || self.degree != rhs.degree {
            return Err(Error::DimensionMismatch("alt add".into()));
        }
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            let e = out.coeffs.entry(k.clone()).or_insert_with(Scalar::zero);
            *e += v.clone();
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        Ok(out)
    }
}

impl SymTensor {
    pub fn zero(dim: usize, degree: usize) -> Self {
        SymTensor { degree, dim, coeffs: BTreeMap::new() }
    }

    /// The constant polynomial (degree 0).
    pub fn constant(dim: usize, c: Scalar) -> Self {
        let mut t = SymTensor::zero(dim, 0);
        if !c.is_zero() {
            t.coeffs.insert(Vec::new(), c);
        }
        t
    }

    /// Degree-1 polynomial from a coordinate vector.
    pub fn linear(coords: &[Scalar]) -> Self {
        let mut t = SymTensor::zero(coords.len(), 1);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                t.coeffs.insert(vec![i as u32], c.clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn insert(&mut self, mono: &[u32], coeff: Scalar) {
        assert_eq!(mono.len(), self.degree);
        assert!(mono.iter().all(|&i| (i as usize) < self.dim), "index out of range");
        if coeff.is_zero() {
            return;
        }
        let mut k = mono.to_vec();
        k.sort_unstable();
        let e = self.coeffs.entry(k).or_insert_with(Scalar::zero);
        *e += coeff;
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return SymTensor::zero(self.dim, self.degree);
        }
        SymTensor {
            degree: self.degree,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    pub fn add(&self, rhs: &SymTensor) -> Result<SymTensor, Error> {
        if self.dim != rhs.dim || self.degree != rhs.degree {
            return Err(Error::DimensionMismatch("sym add".into()));
        }
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            let e = out.coeffs.entry(k.clone()).or_insert_with(Scalar::zero);
            *e += v.clone();
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Polynomial partial derivative in variable `var`.
    pub fn partial(&self, var: u32) -> SymTensor {
        assert!(self.degree > 0);
        let mut out = SymTensor::zero(self.dim, self.degree - 1);
        for (k, v) in &self.coeffs {
            let mult = k.iter().filter(|&&x| x == var).count();
            if mult == 0 {
                continue;
            }
            let mut m = k.clone();
            let pos = m.iter().position(|&x| x == var).unwrap();
            m.remove(pos);
            out.insert(&m, v * &Scalar::from_int(mult as i64));
        }
        out
    }

    /// Directional derivative along a coordinate vector.
    pub fn directional(&self, direction: &[Scalar]) -> SymTensor {
        assert_eq!(direction.len(), self.dim);
        let mut out = SymTensor::zero(self.dim, self.degree.saturating_sub(1));
        for (i, c) in direction.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.partial(i as u32).scale(c)).unwrap();
        }
        out
    }

    /// Polynomial evaluation at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.dim);
        let mut acc = Scalar::zero();
        for (k, v) in &self.coeffs {
            let mut term = v.clone();
            for &i in k {
                term = (&term).mul(&point[i as usize]);
            }
            acc += term;
        }
        acc
    }

    /// Substitute each variable by a linear form in new variables
    /// (`images[k]` is the coordinate vector of the image of variable `k`).
    pub fn substitute(&self, images: &[Vec<Scalar>], new_dim: usize) -> SymTensor {
        assert_eq!(images.len(), self.dim);
        let mut out = SymTensor::zero(new_dim, self.degree);
        for (k, v) in &self.coeffs {
            // product of the image linear forms of the monomial's variables
            let mut terms: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
            terms.insert(Vec::new(), v.clone());
            for &var in k {
                let form = &images[var as usize];
                let mut next: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
                for (mono, c) in &terms {
                    for (j, fj) in form.iter().enumerate() {
                        if fj.is_zero() {
                            continue;
                        }
                        let mut m = mono.clone();
                        m.push(j as u32);
                        m.sort_unstable();
                        let e = next.entry(m).or_insert_with(Scalar::zero);
                        *e += c * fj;
                    }
                }
                terms = next;
            }
            for (m, c) in terms {
                if !c.is_zero() {
                    let e = out.coeffs.entry(m).or_insert_with(Scalar::zero);
                    *e += c;
                }
            }
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        out
    }
}

/// Exterior product; degrees add.
pub fn wedge(a: &AltTensor, b: &AltTensor) -> Result<AltTensor, Error> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(format!(
            "wedge of tensors over dimensions {} and {}",
            a.dim, b.dim
        )));
    }
    let mut out = AltTensor::zero(a.dim, a.degree + b.degree);
    for (ka, va) in &a.coeffs {
        for (kb, vb) in &b.coeffs {
            let mut t = ka.clone();
            t.extend_from_slice(kb);
            out.insert(&t, va * vb);
        }
    }
    Ok(out)
}

/// Symmetric product; with the monomial convention this is polynomial
/// multiplication, so it stays integral.
pub fn sym_mul(a: &SymTensor, b: &SymTensor) -> Result<SymTensor, Error> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(format!(
            "sym_mul of tensors over dimensions {} and {}",
            a.dim, b.dim
        )));
    }
    let mut out = SymTensor::zero(a.dim, a.degree + b.degree);
    for (ka, va) in &a.coeffs {
        for (kb, vb) in &b.coeffs {
            let mut t = ka.clone();
            t.extend_from_slice(kb);
            t.sort_unstable();
            let e = out.coeffs.entry(t).or_insert_with(Scalar::zero);
            *e += va * vb;
        }
    }
    out.coeffs.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// The column-regrouping map `μ: Λⁿ(SᵐV) → Sᵐ(ΛⁿV)`.
///
/// The input is an alternating tensor whose ambient indices enumerate
/// `sym_basis` (the monomial basis of `SᵐV`); the output is a symmetric
/// tensor whose ambient indices enumerate `alt_basis` (the basis of `ΛⁿV`).
/// Each symmetric slot is expanded into its distinct tensor words, words are
/// regrouped column-wise into wedges, and the symmetric result is collapsed
/// back onto sorted monomials.
pub fn shuffle_mu(
    t: &AltTensor,
    sym_basis: &SymBasis,
    alt_basis: &AltBasis,
) -> Result<SymTensor, Error> {
    if t.dim != sym_basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "alternating tensor over dimension {} does not match |S^m basis| = {}",
            t.dim,
            sym_basis.len()
        )));
    }
    if alt_basis.dim != sym_basis.dim || alt_basis.degree != t.degree {
        return Err(Error::DimensionMismatch(
            "alt basis must be Λⁿ of the same V with n = input degree".into(),
        ));
    }
    let n = t.degree;
    let m = sym_basis.degree;
    // words of ⊗^m(ΛⁿV), keyed by the ordered tuple of ΛⁿV basis indices
    let mut words: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
    for (key, coeff) in &t.coeffs {
        let slot_words: Vec<Vec<Vec<u32>>> = key
            .iter()
            .map(|&mi| distinct_permutations(&sym_basis.monomials[mi as usize]))
            .collect();
        let mut choice = vec![0usize; n];
        loop {
            // regroup: column j collects letter j of every slot's word
            let mut sign = 1i8;
            let mut word: Vec<u32> = Vec::with_capacity(m);
            let mut dead = false;
            for j in 0..m {
                let col: Vec<u32> = (0..n).map(|s| slot_words[s][choice[s]][j]).collect();
                match sort_with_sign(&col) {
                    Some((sorted, sg)) => {
                        sign *= sg;
                        word.push(alt_basis.index_of(&sorted).expect("tuple in enumeration"));
                    }
                    None => {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead {
                let c = if sign < 0 { -coeff.clone() } else { coeff.clone() };
                let e = words.entry(word).or_insert_with(Scalar::zero);
                *e += c;
            }
            // next word choice
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                choice[k] += 1;
                if choice[k] < slot_words[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    // collapse the symmetric word tensor onto sorted monomials
    let mut grouped: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
    for (w, c) in words {
        let mut k = w.clone();
        k.sort_unstable();
        let e = grouped.entry(k).or_insert_with(Scalar::zero);
        *e += c;
    }
    let mut out = SymTensor::zero(alt_basis.len(), m);
    for (k, c) in grouped {
        if c.is_zero() {
            continue;
        }
        let perms = distinct_permutations(&k).len() as i64;
        out.coeffs
            .insert(k, c.checked_div(&Scalar::from_int(perms)).unwrap());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn e(dim: usize, i: u32) -> AltTensor {
        let mut v = vec![Scalar::zero(); dim];
        v[i as usize] = Scalar::one();
        AltTensor::from_vector(&v)
    }

    fn x(dim: usize, i: u32) -> SymTensor {
        let mut v = vec![Scalar::zero(); dim];
        v[i as usize] = Scalar::one();
        SymTensor::linear(&v)
    }

    #[test]
    fn wedge_basics() {
        // e₁ ∧ e₂ = basis element (1,2) with coefficient 1
        let w = wedge(&e(3, 0), &e(3, 1)).unwrap();
        assert_eq!(w.coeffs.get(&vec![0, 1]), Some(&s(1)));
        // e₂ ∧ e₁ = −(1,2)
        let w = wedge(&e(3, 1), &e(3, 0)).unwrap();
        assert_eq!(w.coeffs.get(&vec![0, 1]), Some(&s(-1)));
        // (e₁+e₂) ∧ (e₁+e₂) = 0
        let v = e(3, 0).add(&e(3, 1)).unwrap();
        assert!(wedge(&v, &v).unwrap().is_zero());
        // dimension mismatch is an error
        assert!(wedge(&e(3, 0), &e(4, 0)).is_err());
    }

    #[test]
    fn sym_mul_basics() {
        let p = sym_mul(&x(2, 0), &x(2, 1)).unwrap();
        assert_eq!(p.coeffs.get(&vec![0, 1]), Some(&s(1)));
        let p = sym_mul(&x(2, 0), &x(2, 0)).unwrap();
        assert_eq!(p.coeffs.get(&vec![0, 0]), Some(&s(1)));
        // (x+y)(x−y) = x² − y²
        let a = x(2, 0).add(&x(2, 1)).unwrap();
        let b = x(2, 0).add(&x(2, 1).scale(&s(-1))).unwrap();
        let p = sym_mul(&a, &b).unwrap();
        assert_eq!(p.coeffs.get(&vec![0, 0]), Some(&s(1)));
        assert_eq!(p.coeffs.get(&vec![1, 1]), Some(&s(-1)));
        assert_eq!(p.coeffs.get(&vec![0, 1]), None);
    }

    #[test]
    fn associativity_on_random_small_tensors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut rnd_alt = |deg: usize| {
                let mut t = AltTensor::zero(4, deg);
                for _ in 0..3 {
                    let tup: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..4u32)).collect();
                    t.insert(&tup, s(rng.gen_range(-3..4)));
                }
                t
            };
            let (a, b, c) = (rnd_alt(1), rnd_alt(1), rnd_alt(2));
            let left = wedge(&wedge(&a, &b).unwrap(), &c).unwrap();
            let right = wedge(&a, &wedge(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let mut rnd_sym = |deg: usize| {
                let mut t = SymTensor::zero(3, deg);
                for _ in 0..3 {
                    let tup: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..3u32)).collect();
                    t.insert(&tup, s(rng.gen_range(-3..4)));
                }
                t
            };
            let (a, b, c) = (rnd_sym(1), rnd_sym(2), rnd_sym(1));
            let left = sym_mul(&sym_mul(&a, &b).unwrap(), &c).unwrap();
            let right = sym_mul(&a, &sym_mul(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    // ----- independent ⊗-word oracle for μ -----

    /// Λⁿ(⊗ᵐV) element: ordered n-tuples of m-letter words, canonicalized by
    /// sorting the words lexicographically with sign.
    type WordWedge = BTreeMap<Vec<Vec<u32>>, Scalar>;

    fn word_wedge_insert(map: &mut WordWedge, words: &[Vec<u32>], c: Scalar) {
        // sort words lexicographically, tracking the permutation sign
        let mut v: Vec<Vec<u32>> = words.to_vec();
        let mut sign = 1i8;
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        for w in v.windows(2) {
            if w[0] == w[1] {
                return;
            }
        }
        let e = map.entry(v).or_insert_with(Scalar::zero);
        *e += if sign < 0 { -c } else { c };
    }

    /// Brute-force μ: expand, regroup columns on raw ⊗-words, collapse.
    fn mu_oracle(t: &AltTensor, sym_basis: &SymBasis, alt_basis: &AltBasis) -> SymTensor {
        let n = t.degree;
        let m = sym_basis.degree;
        let mut expanded: WordWedge = BTreeMap::new();
        for (key, coeff) in &t.coeffs {
            let slot_words: Vec<Vec<Vec<u32>>> = key
                .iter()
                .map(|&mi| distinct_permutations(&sym_basis.monomials[mi as usize]))
                .collect();
            let mut idx = vec![0usize; n];
            'outer: loop {
                let words: Vec<Vec<u32>> =
                    (0..n).map(|s| slot_words[s][idx[s]].clone()).collect();
                word_wedge_insert(&mut expanded, &words, coeff.clone());
                for k in 0..=n {
                    if k == n {
                        break 'outer;
                    }
                    idx[k] += 1;
                    if idx[k] < slot_words[k].len() {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
        // μ on raw words, output as ⊗ᵐ(ΛⁿV) words
        let mut out_words: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (words, c) in &expanded {
            let mut sign = 1i8;
            let mut word: Vec<u32> = Vec::new();
            let mut dead = false;
            for j in 0..m {
                let col: Vec<u32> = (0..n).map(|s| words[s][j]).collect();
                match sort_with_sign(&col) {
                    Some((sorted, sg)) => {
                        sign *= sg;
                        word.push(alt_basis.index_of(&sorted).unwrap());
                    }
                    None => {
                        dead = true;
                        break;
                    }
                }
            }
            if dead {
                continue;
            }
            let e = out_words.entry(word).or_insert_with(Scalar::zero);
            *e += if sign < 0 { -c.clone() } else { c.clone() };
        }
        let mut grouped: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (w, c) in out_words {
            let mut k = w.clone();
            k.sort_unstable();
            *grouped.entry(k).or_insert_with(Scalar::zero) += c;
        }
        let mut out = SymTensor::zero(alt_basis.len(), m);
        for (k, c) in grouped {
            if !c.is_zero() {
                let perms = distinct_permutations(&k).len() as i64;
                out.coeffs.insert(k, c.checked_div(&Scalar::from_int(perms)).unwrap());
            }
        }
        out
    }

    #[test]
    fn mu_is_identity_for_single_wedge_slot() {
        // n = 1: μ is the identity on SᵐV (modulo the basis reindexing)
        for m in 1..=3usize {
            let sb = SymBasis::new(3, m);
            let ab = AltBasis::new(3, 1);
            let mut t = AltTensor::zero(sb.len(), 1);
            t.insert(&[2], s(5));
            t.insert(&[0], s(-1));
            let out = shuffle_mu(&t, &sb, &ab).unwrap();
            // the monomial with index k over SᵐV maps to the same monomial in
            // variables eᵢ = Λ¹ basis (identity reindexing since dim matches)
            let mut expected = SymTensor::zero(3, m);
            expected.insert(&sb.monomials[2], s(5));
            expected.insert(&sb.monomials[0], s(-1));
            assert_eq!(out, expected);
        }
    }

    #[test]
    fn mu_on_pure_powers_gives_power_of_wedge() {
        // (v₁^m) ∧ (v₂^m) ↦ (v₁∧v₂)^m
        for m in 1..=3usize {
            let sb = SymBasis::new(2, m);
            let ab = AltBasis::new(2, 2);
            let i1 = sb.index_of(&vec![0u32; m]).unwrap();
            let i2 = sb.index_of(&vec![1u32; m]).unwrap();
            let mut t = AltTensor::zero(sb.len(), 2);
            t.insert(&[i1, i2], s(1));
            let out = shuffle_mu(&t, &sb, &ab).unwrap();
            let mut expected = SymTensor::zero(1, m);
            expected.insert(&vec![0u32; m], s(1));
            assert_eq!(out, expected);
        }
    }

    #[test]
    fn mu_matches_word_expansion_oracle_on_small_inputs() {
        use rand::{Rng, SeedableRng};
        // all dims ≤ 3, n ≤ 2, m ≤ 3, random sparse inputs
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for dim in 1..=3usize {
            for n in 1..=2usize {
                if n > dim {
                    continue;
                }
                for m in 1..=3usize {
                    let sb = SymBasis::new(dim, m);
                    let ab = AltBasis::new(dim, n);
                    for _ in 0..10 {
                        let mut t = AltTensor::zero(sb.len(), n);
                        for _ in 0..4 {
                            let tup: Vec<u32> =
                                (0..n).map(|_| rng.gen_range(0..sb.len() as u32)).collect();
                            t.insert(&tup, s(rng.gen_range(-3..4)));
                        }
                        let fast = shuffle_mu(&t, &sb, &ab).unwrap();
                        let slow = mu_oracle(&t, &sb, &ab);
                        assert_eq!(fast, slow);
                    }
                }
            }
        }
    }

    #[test]
    fn mu_specific_2d_example() {
        // dim V = 2, n = 2, m = 2: (x∘x) ∧ (y∘y) ↦ (x∧y)²
        let sb = SymBasis::new(2, 2);
        let ab = AltBasis::new(2, 2);
        let xx = sb.index_of(&[0, 0]).unwrap();
        let yy = sb.index_of(&[1, 1]).unwrap();
        let mut t = AltTensor::zero(sb.len(), 2);
        t.insert(&[xx, yy], s(1));
        let out = shuffle_mu(&t, &sb, &ab).unwrap();
        let oracle = mu_oracle(&t, &sb, &ab);
        assert_eq!(out, oracle);
        let mut expected = SymTensor::zero(1, 2);
        expected.insert(&[0, 0], s(1));
        assert_eq!(out, expected);
    }

    #[test]
    fn mu_degree_bookkeeping_errors() {
        let sb = SymBasis::new(2, 2);
        let ab_wrong = AltBasis::new(2, 1);
        let t = AltTensor::zero(sb.len(), 2);
        assert!(shuffle_mu(&t, &sb, &ab_wrong).is_err());
        let t_wrong = AltTensor::zero(sb.len() + 1, 2);
        assert!(shuffle_mu(&t_wrong, &sb, &AltBasis::new(2, 2)).is_err());
    }

    #[test]
    fn polynomial_partial_and_evaluate() {
        // p = x²y: ∂x p = 2xy, p(2,3) = 12
        let p = sym_mul(&sym_mul(&x(2, 0), &x(2, 0)).unwrap(), &x(2, 1)).unwrap();
        let dx = p.partial(0);
        let mut expected = SymTensor::zero(2, 2);
        expected.insert(&[0, 1], s(2));
        assert_eq!(dx, expected);
        assert_eq!(p.evaluate(&[s(2), s(3)]), s(12));
    }
}
