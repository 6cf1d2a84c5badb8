//! The two-parameter trace-power matrix family and its determinant identity.
//!
//! For a square matrix `G`, the family member `M_{t,l}(G)` is the `t x t`
//! matrix with entries `[M]_i^j = tr G^{i+j+l-2}` (1-based `i`, `j`), so each
//! anti-diagonal is constant. Its determinant has a closed form in terms of
//! the distinct eigenvalues `x_1..x_m` of `G` and their algebraic
//! multiplicities `p_1..p_m`:
//!
//! ```text
//! det M_{t,l} = sum over subsets T = {i_1 < ... < i_t} of {1..m} of
//!               p(T) * (x(T))^l * (det V(x_{i_1}, .., x_{i_t}))^2
//! ```
//!
//! with `p(T)` and `x(T)` the products of the selected multiplicities and
//! eigenvalues, `V` the Vandermonde matrix, and `det M_{t,l} = 0` whenever
//! `t > m`. [`verify_theorem`] checks the identity for a concrete matrix and
//! its known spectrum by evaluating both sides independently.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Selects a member of the matrix family: `t` is the matrix order within
/// the family (at least 1), `l` the power offset (at least 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HankelSpec {
    t: usize,
    l: usize,
}

impl HankelSpec {
    pub fn new(t: usize, l: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::Validation(
                "family order t must be at least 1".into(),
            ));
        }
        Ok(HankelSpec { t, l })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Highest power of `G` whose trace appears in `M_{t,l}`.
    pub fn max_power(&self) -> usize {
        self.l + 2 * self.t - 2
    }
}

/// Distinct eigenvalues paired with their algebraic multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<K: Field> {
    eigenvalues: Vec<K>,
    multiplicities: Vec<usize>,
}

impl<K: Field> Spectrum<K> {
    /// Validates distinctness (exact comparison), positive multiplicities,
    /// and a common field.
    pub fn new(eigenvalues: Vec<K>, multiplicities: Vec<usize>) -> Result<Self> {
        if eigenvalues.is_empty() {
            return Err(Error::Validation("spectrum must be nonempty".into()));
        }
        if eigenvalues.len() != multiplicities.len() {
            return Err(Error::Validation(
                "eigenvalue and multiplicity counts differ".into(),
            ));
        }
        if multiplicities.contains(&0) {
            return Err(Error::Validation("multiplicities must be positive".into()));
        }
        let ctx = eigenvalues[0].context();
        if eigenvalues.iter().any(|v| v.context() != ctx) {
            return Err(Error::Validation(
                "eigenvalues drawn from different fields".into(),
            ));
        }
        for i in 0..eigenvalues.len() {
            for j in i + 1..eigenvalues.len() {
                if eigenvalues[i] == eigenvalues[j] {
                    return Err(Error::Validation(format!(
                        "eigenvalues must be pairwise distinct, found {} twice",
                        eigenvalues[i]
                    )));
                }
            }
        }
        Ok(Spectrum {
            eigenvalues,
            multiplicities,
        })
    }

    /// Number of distinct eigenvalues.
    pub fn distinct_count(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Sum of multiplicities: the order of a matrix realizing the spectrum.
    pub fn order(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn eigenvalues(&self) -> &[K] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// The block-diagonal realization: each eigenvalue repeated according to
    /// its multiplicity down the diagonal.
    pub fn block_diagonal(&self) -> Matrix<K> {
        let mut diag = Vec::with_capacity(self.order());
        for (value, &mult) in self.eigenvalues.iter().zip(&self.multiplicities) {
            for _ in 0..mult {
                diag.push(value.clone());
            }
        }
        Matrix::diagonal(diag)
    }
}

/// Assembles `M_{t,l}` from precomputed power traces: entry `(i, j)`
/// (1-based) is `traces[i + j + l - 2]`.
///
/// `traces` must cover indices `0 ..= l + 2t - 2`.
pub fn build_hankel<K: Field>(traces: &[K], spec: HankelSpec) -> Result<Matrix<K>> {
    let needed = spec.max_power() + 1;
    if traces.len() < needed {
        return Err(Error::Precondition(format!(
            "need traces of powers 0..={}, got only {}",
            spec.max_power(),
            traces.len()
        )));
    }
    Ok(Matrix::from_fn(spec.t, |i, j| {
        traces[i + j + spec.l].clone()
    }))
}

/// `det M_{t,l}(G)`, computing exactly the traces the member needs.
pub fn hankel_det<K: Field>(g: &Matrix<K>, spec: HankelSpec) -> K {
    let traces = g.power_traces(spec.max_power());
    build_hankel(&traces, spec)
        .expect("traces cover the family member")
        .determinant()
}

/// Determinant of the Vandermonde matrix on the given nodes, evaluated by
/// the product formula `prod_{i<j} (z_j - z_i)`; zero iff two nodes
/// coincide, and 1 for a single node (empty product).
pub fn vandermonde_det<K: Field>(nodes: &[K]) -> Result<K> {
    let first = nodes
        .first()
        .ok_or_else(|| Error::Precondition("Vandermonde determinant of no nodes".into()))?;
    let mut acc = first.one_like();
    for j in 1..nodes.len() {
        for i in 0..j {
            acc = acc * &(nodes[j].clone() - &nodes[i]);
        }
    }
    Ok(acc)
}

/// Evaluates the closed form for `det M_{t,l}` from a spectrum: the sum over
/// all size-`t` index subsets, enumerated in increasing lexicographic order,
/// of `p(T) * (x(T))^l * det^2 V`. Returns 0 when `t` exceeds the number of
/// distinct eigenvalues.
pub fn rhs_closed_form<K: Field>(spectrum: &Spectrum<K>, spec: HankelSpec) -> K {
    let m = spectrum.distinct_count();
    let witness = &spectrum.eigenvalues()[0];
    if spec.t > m {
        return witness.zero_like();
    }
    let mut total = witness.zero_like();
    for_each_subset(m, spec.t, |subset| {
        // Multiplicities enter as field elements (images of integers), so
        // characteristic-p collapse happens here and nowhere else.
        let mut mult_product = witness.one_like();
        let mut value_product = witness.one_like();
        for &i in subset {
            mult_product = mult_product * &witness.int_like(spectrum.multiplicities()[i] as i64);
            value_product = value_product * &spectrum.eigenvalues()[i];
        }
        let nodes: Vec<K> = subset
            .iter()
            .map(|&i| spectrum.eigenvalues()[i].clone())
            .collect();
        let v = vandermonde_det(&nodes).expect("subset is nonempty");
        total = total.clone()
            + &(mult_product * &value_product.powu(spec.l as u64) * &(v.clone() * &v));
    });
    total
}

/// Calls `f` on every size-`k` subset of `0..m` in increasing lexicographic
/// order.
fn for_each_subset(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    debug_assert!(k >= 1 && k <= m);
    let mut indices: Vec<usize> = (0..k).collect();
    loop {
        f(&indices);
        // Advance to the next combination.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if indices[pos] != pos + m - k {
                indices[pos] += 1;
                for later in pos + 1..k {
                    indices[later] = indices[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return;
            }
        }
    }
}

/// Outcome of checking `det M_{t,l}(G)` against the closed form evaluated
/// from a caller-supplied spectrum. Inequality is a reported outcome, not an
/// error.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoremWitness<K: Field> {
    pub t: usize,
    pub l: usize,
    pub lhs: K,
    pub rhs: K,
    pub equal: bool,
}

impl<K: Field> Serialize for TheoremWitness<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TheoremWitness", 5)?;
        s.serialize_field("t", &self.t)?;
        s.serialize_field("l", &self.l)?;
        s.serialize_field("lhs", &self.lhs.to_string())?;
        s.serialize_field("rhs", &self.rhs.to_string())?;
        s.serialize_field("equal", &self.equal)?;
        s.end()
    }
}

/// Evaluates both sides of the determinant identity for `G` (whose true
/// spectrum the caller supplies) and reports whether they agree exactly.
///
/// Only spectra expressible in the working field can be checked this way; a
/// matrix with irrational eigenvalues (the companion matrix of `x^3 - 1`,
/// say) has no `Spectrum` over the rationals, and those cases are covered by
/// the characteristic-polynomial oracle instead.
pub fn verify_theorem<K: Field>(
    g: &Matrix<K>,
    spectrum: &Spectrum<K>,
    spec: HankelSpec,
) -> TheoremWitness<K> {
    let lhs = hankel_det(g, spec);
    let rhs = rhs_closed_form(spectrum, spec);
    let equal = lhs == rhs;
    TheoremWitness {
        t: spec.t,
        l: spec.l,
        lhs,
        rhs,
        equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use proptest::prelude::*;

    fn rat(n: i64) -> Rational {
        Rational::from_int((), n)
    }

    fn spec(t: usize, l: usize) -> HankelSpec {
        HankelSpec::new(t, l).unwrap()
    }

    #[test]
    fn build_hankel_from_diag_traces() {
        let traces = vec![rat(2), rat(3), rat(5), rat(9)];
        let m = build_hankel(&traces, spec(2, 0)).unwrap();
        assert_eq!(
            m,
            Matrix::from_rows(vec![vec![rat(2), rat(3)], vec![rat(3), rat(5)]]).unwrap()
        );
        let shifted = build_hankel(&traces, spec(2, 1)).unwrap();
        assert_eq!(
            shifted,
            Matrix::from_rows(vec![vec![rat(3), rat(5)], vec![rat(5), rat(9)]]).unwrap()
        );
    }

    #[test]
    fn build_hankel_one_by_one() {
        let traces = vec![rat(7), rat(11), rat(13)];
        let m = build_hankel(&traces, spec(1, 2)).unwrap();
        assert_eq!(*m.get(0, 0), rat(13));
    }

    #[test]
    fn build_hankel_reports_missing_traces() {
        let traces = vec![rat(2), rat(3)];
        let err = build_hankel(&traces, spec(2, 1)).unwrap_err();
        assert!(err.to_string().contains("0..=3"));
    }

    #[test]
    fn hankel_det_two_distinct_eigenvalues() {
        // Two simple eigenvalues 1 and 2 with l = 1: 1*1*(1*2)^1*(1-2)^2 = 2.
        let g = Matrix::diagonal(vec![rat(1), rat(2)]);
        assert_eq!(hankel_det(&g, spec(2, 1)), rat(2));
    }

    #[test]
    fn hankel_det_vanishes_beyond_spectral_size() {
        // A scalar matrix has one distinct eigenvalue, so t = 2 vanishes.
        let g = Matrix::diagonal(vec![rat(4), rat(4), rat(4)]);
        for l in 0..4 {
            assert_eq!(hankel_det(&g, spec(2, l)), rat(0));
        }
    }

    #[test]
    fn hankel_det_with_multiplicity() {
        // Eigenvalues 3 (twice) and 5: 2*1*(3-5)^2 = 8 at (t,l) = (2,0).
        let g = Matrix::diagonal(vec![rat(3), rat(3), rat(5)]);
        assert_eq!(hankel_det(&g, spec(2, 0)), rat(8));
    }

    #[test]
    fn vandermonde_product_formula() {
        // (2-1)(3-1)(3-2) = 2.
        assert_eq!(vandermonde_det(&[rat(1), rat(2), rat(3)]).unwrap(), rat(2));
        assert_eq!(vandermonde_det(&[rat(5), rat(5)]).unwrap(), rat(0));
        assert_eq!(vandermonde_det(&[rat(9)]).unwrap(), rat(1));
        assert!(vandermonde_det::<Rational>(&[]).is_err());
    }

    #[test]
    fn rhs_single_eigenvalue_is_weighted_power() {
        // One eigenvalue x with multiplicity p: det M_{1,l} = p * x^l.
        let s = Spectrum::new(vec![rat(3)], vec![4]).unwrap();
        assert_eq!(rhs_closed_form(&s, spec(1, 0)), rat(4));
        assert_eq!(rhs_closed_form(&s, spec(1, 2)), rat(36));
    }

    #[test]
    fn rhs_vanishes_beyond_distinct_count() {
        let s = Spectrum::new(vec![rat(1), rat(2)], vec![1, 1]).unwrap();
        assert_eq!(rhs_closed_form(&s, spec(3, 0)), rat(0));
    }

    #[test]
    fn rhs_two_eigenvalue_closed_form() {
        let s = Spectrum::new(vec![rat(3), rat(5)], vec![2, 1]).unwrap();
        assert_eq!(rhs_closed_form(&s, spec(2, 0)), rat(8));
    }

    #[test]
    fn verify_theorem_on_diagonal_matrix() {
        let g = Matrix::diagonal(vec![rat(1), rat(2)]);
        let s = Spectrum::new(vec![rat(1), rat(2)], vec![1, 1]).unwrap();
        let w = verify_theorem(&g, &s, spec(2, 1));
        assert!(w.equal);
        assert_eq!(w.lhs, rat(2));
        assert_eq!(w.rhs, rat(2));
    }

    #[test]
    fn verify_theorem_above_spectral_size() {
        let g = Matrix::<Rational>::identity(3, ());
        let s = Spectrum::new(vec![rat(1)], vec![3]).unwrap();
        let w = verify_theorem(&g, &s, spec(2, 0));
        assert!(w.equal);
        assert_eq!(w.lhs, rat(0));
    }

    #[test]
    fn spectrum_rejects_repeats_and_zero_multiplicity() {
        assert!(Spectrum::new(vec![rat(1), rat(1)], vec![1, 1]).is_err());
        assert!(Spectrum::new(vec![rat(1)], vec![0]).is_err());
        assert!(Spectrum::<Rational>::new(vec![], vec![]).is_err());
    }

    #[test]
    fn subset_enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn witness_serializes_scalars_as_text() {
        let w = TheoremWitness {
            t: 2,
            l: 1,
            lhs: rat(2),
            rhs: rat(2),
            equal: true,
        };
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"t":2,"l":1,"lhs":"2","rhs":"2","equal":true}"#);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Anti-diagonals of a family member are constant.
        #[test]
        fn hankel_structure(t in 1usize..=5, l in 0usize..=3,
                            vals in prop::collection::vec(-9i64..=9, 16)) {
            let traces: Vec<Rational> =
                (0..t * 2 + l).map(|k| rat(vals[k % vals.len()])).collect();
            let m = build_hankel(&traces, spec(t, l)).unwrap();
            for i in 0..t {
                for j in 0..t {
                    for i2 in 0..t {
                        for j2 in 0..t {
                            if i + j == i2 + j2 {
                                prop_assert_eq!(m.get(i, j), m.get(i2, j2));
                            }
                        }
                    }
                }
            }
        }

        /// Member (t, l+1) sits inside member (t+1, l): drop the first row
        /// and last column (equivalently, by the Hankel structure, the last
        /// row and first column).
        #[test]
        fn shift_coherence(t in 1usize..=4, l in 0usize..=3,
                           vals in prop::collection::vec(-9i64..=9, 20)) {
            let needed = l + 2 * (t + 1) - 1;
            let traces: Vec<Rational> =
                (0..needed).map(|k| rat(vals[k % vals.len()])).collect();
            let larger = build_hankel(&traces, spec(t + 1, l)).unwrap();
            let shifted = build_hankel(&traces, spec(t, l + 1)).unwrap();
            for i in 0..t {
                for j in 0..t {
                    prop_assert_eq!(shifted.get(i, j), larger.get(i + 1, j));
                    prop_assert_eq!(shifted.get(i, j), larger.get(i, j + 1));
                }
            }
        }

        /// Swapping two Vandermonde nodes negates the determinant.
        #[test]
        fn vandermonde_antisymmetry(vals in prop::collection::vec(-9i64..=9, 2..=5),
                                    swap in (0usize..5, 0usize..5)) {
            let nodes: Vec<Rational> = vals.iter().map(|&v| rat(v)).collect();
            let (a, b) = (swap.0 % nodes.len(), swap.1 % nodes.len());
            prop_assume!(a != b);
            let mut swapped = nodes.clone();
            swapped.swap(a, b);
            prop_assert_eq!(
                vandermonde_det(&swapped).unwrap(),
                -vandermonde_det(&nodes).unwrap()
            );
        }

        /// The determinant identity on small constructed spectra.
        #[test]
        fn theorem_holds_on_block_diagonals(
            raw in prop::collection::vec((-9i64..=9, 1usize..=3), 1..=4),
            l in 0usize..=3,
        ) {
            let mut eigen = Vec::new();
            let mut mult = Vec::new();
            for (v, p) in raw {
                if !eigen.contains(&rat(v)) {
                    eigen.push(rat(v));
                    mult.push(p);
                }
            }
            let s = Spectrum::new(eigen, mult).unwrap();
            let g = s.block_diagonal();
            for t in 1..=s.distinct_count() + 2 {
                let w = verify_theorem(&g, &s, spec(t, l));
                prop_assert!(w.equal, "t={} l={} lhs={} rhs={}", t, l, w.lhs, w.rhs);
            }
        }
    }
}
