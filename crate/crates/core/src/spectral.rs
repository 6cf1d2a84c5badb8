//! Spectral size, degeneracy, and spectral-polynomial recovery from traces.
//!
//! Everything here is driven by the determinants `det M_{t,0}(G)` of the
//! trace-power family: the spectral size (number of distinct eigenvalues in
//! the algebraic closure) is the largest `t` with a nonzero determinant, a
//! matrix is singular iff `det M_{m,1}(G) = 0`, and the monic polynomial
//! whose roots are exactly the distinct eigenvalues is
//!
//! ```text
//! P_spec(x) = det M_{m,1}(xI - G) / det M_m(G).
//! ```
//!
//! An independent oracle — the squarefree part of the characteristic
//! polynomial — cross-checks each of these paths in the tests and in the
//! aggregate [`analyze`] report.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{is_positive_rational, Field, Rational};
use crate::hankel::{build_hankel, hankel_det, HankelSpec};
use crate::matrix::{Matrix, PolyMatrix};
use crate::poly::Poly;

/// Trace and determinant data shared by the operations below: traces of
/// `G^0..G^(2n-1)` and the family determinants `det M_{t,0}` for `t = 1..n`.
struct HankelScan<K: Field> {
    traces: Vec<K>,
    dets: Vec<K>,
    size: usize,
}

fn scan<K: Field>(g: &Matrix<K>) -> HankelScan<K> {
    let n = g.order();
    let traces = g.power_traces(2 * n - 1);
    let mut dets = Vec::with_capacity(n);
    let mut size = 0;
    for t in 1..=n {
        let spec = HankelSpec::new(t, 0).expect("t >= 1");
        let det = build_hankel(&traces, spec)
            .expect("traces cover the scan")
            .determinant();
        if !det.is_zero() {
            size = t;
        }
        dets.push(det);
    }
    HankelScan { traces, dets, size }
}

/// The number of distinct eigenvalues of `G` in the algebraic closure,
/// detected as the largest `t` in `1..=n` with `det M_{t,0}(G) != 0`.
///
/// The whole range must be scanned: `det M_{t,0}` can vanish for `t` below
/// the spectral size (the companion matrix of `x^3 - 1` has `det M_{2,0} =
/// 0` but three distinct eigenvalues), so stopping at the first zero would
/// be wrong.
///
/// In characteristic 0 the result is always at least 1. Over GF(p) the
/// determinants see multiplicities reduced mod p, so the result undercounts
/// whenever a multiplicity (or a subset product of them) vanishes in the
/// field; a return of 0 signals that total collapse.
pub fn spectral_size<K: Field>(g: &Matrix<K>) -> usize {
    scan(g).size
}

/// Spectral size of a symmetric rational matrix by the cheaper first-zero
/// scan, valid because `det M_{t,0} > 0` for every `t` up to the spectral
/// size when the matrix is real symmetric.
pub fn spectral_size_symmetric(g: &Matrix<Rational>) -> Result<usize> {
    if !g.is_symmetric() {
        return Err(Error::Precondition(
            "first-zero scan requires a symmetric matrix".into(),
        ));
    }
    let n = g.order();
    let traces = g.power_traces(2 * n - 2);
    for t in 2..=n {
        let spec = HankelSpec::new(t, 0).expect("t >= 1");
        let det = build_hankel(&traces, spec)
            .expect("traces cover the scan")
            .determinant();
        if det.is_zero() {
            return Ok(t - 1);
        }
        debug_assert!(is_positive_rational(&det));
    }
    Ok(n)
}

/// The trace of `(xI - G)^k` as a polynomial in `x`, expanded from the plain
/// power traces of `G` by the binomial theorem:
/// `tr (xI - G)^k = sum_j C(k,j) (-1)^j tr(G^j) x^(k-j)`.
///
/// `traces` must cover indices `0..=k`; the result has degree `k` with
/// leading coefficient `n` (the matrix order in the field).
pub fn shifted_power_trace<K: Field>(traces: &[K], k: usize, order: usize) -> Result<Poly<K>> {
    if traces.len() <= k {
        return Err(Error::Precondition(format!(
            "need traces of powers 0..={k}, got only {}",
            traces.len()
        )));
    }
    let witness = &traces[0];
    debug_assert_eq!(*witness, witness.int_like(order as i64));
    // Binomial row computed in the field by Pascal's rule, so the
    // characteristic-p reductions come out right by construction.
    let mut binom = vec![witness.one_like()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(binom.len() + 1);
        next.push(witness.one_like());
        for w in binom.windows(2) {
            next.push(w[0].clone() + &w[1]);
        }
        next.push(witness.one_like());
        binom = next;
    }
    let mut coeffs = vec![witness.zero_like(); k + 1];
    for (j, trace) in traces.iter().take(k + 1).enumerate() {
        let term = binom[j].clone() * trace;
        coeffs[k - j] = if j % 2 == 0 { term } else { -term };
    }
    Ok(Poly::new(coeffs))
}

fn require_characteristic_zero<K: Field>(g: &Matrix<K>, what: &str) -> Result<()> {
    let ch = K::characteristic(g.context());
    if ch != 0 {
        return Err(Error::UnsupportedField(format!(
            "{what} is only supported in characteristic 0, got characteristic {ch}"
        )));
    }
    Ok(())
}

/// The monic polynomial whose roots are exactly the distinct eigenvalues of
/// `G`, recovered from traces alone: with `m` the spectral size, the `m x m`
/// matrix of shifted power traces `tr (xI - G)^(i+j-1)` is assembled, its
/// determinant divided by the nonzero scalar `det M_m(G)`.
pub fn spectral_polynomial<K: Field>(g: &Matrix<K>) -> Result<Poly<K>> {
    require_characteristic_zero(g, "spectral polynomial recovery")?;
    let data = scan(g);
    let m = data.size;
    let order = g.order();
    let numerator = PolyMatrix::from_fn(m, |i, j| {
        shifted_power_trace(&data.traces, i + j + 1, order).expect("traces cover 2m-1")
    })
    .determinant();
    let denominator = &data.dets[m - 1];
    if denominator.is_zero() {
        // Unreachable when the scan is correct; a zero here is a bug.
        return Err(Error::InvariantViolation(
            "det M_m(G) vanished for the detected spectral size".into(),
        ));
    }
    let result = numerator.scale_div(denominator)?;
    debug_assert!(result.is_monic() && result.degree() == Some(m));
    Ok(result)
}

/// Whether `G` is degenerate (singular), read off the family:
/// `det M_{m,1}(G) = 0` iff 0 is an eigenvalue. The verdict is cross-checked
/// against `det G = 0`; disagreement would falsify the identity and is
/// reported as an invariant violation.
pub fn degeneracy_test<K: Field>(g: &Matrix<K>) -> Result<bool> {
    require_characteristic_zero(g, "degeneracy test")?;
    let data = scan(g);
    let det_m1 = build_hankel(&data.traces, HankelSpec::new(data.size, 1).expect("m >= 1"))
        .expect("traces cover (m, 1)")
        .determinant();
    let degenerate = det_m1.is_zero();
    if degenerate != g.determinant().is_zero() {
        return Err(Error::InvariantViolation(format!(
            "degeneracy verdicts disagree: det M_(m,1) zero = {degenerate}, det G zero = {}",
            !degenerate
        )));
    }
    Ok(degenerate)
}

/// Independent spectral-size oracle: the degree of the squarefree part of
/// the characteristic polynomial, which is the number of distinct roots in
/// the algebraic closure.
pub fn oracle_spectral_size<K: Field>(g: &Matrix<K>) -> Result<usize> {
    let sf = g.char_poly()?.squarefree_part()?;
    Ok(sf.degree().expect("characteristic polynomial is monic"))
}

/// Witness for the homothety scaling law
/// `det M_{t,l}(cG) = c^(t*l + t*(t-1)) * det M_{t,l}(G)`.
///
/// The exponent follows from the closed form: scaling `G` by `c` scales
/// `x(T)^l` by `c^(t*l)` and the squared Vandermonde factor by `c^(t*(t-1))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalingWitness<K: Field> {
    pub t: usize,
    pub l: usize,
    pub exponent: u64,
    pub scaled_det: K,
    pub predicted: K,
    pub equal: bool,
}

impl<K: Field> Serialize for ScalingWitness<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ScalingWitness", 6)?;
        s.serialize_field("t", &self.t)?;
        s.serialize_field("l", &self.l)?;
        s.serialize_field("exponent", &self.exponent)?;
        s.serialize_field("scaled_det", &self.scaled_det.to_string())?;
        s.serialize_field("predicted", &self.predicted.to_string())?;
        s.serialize_field("equal", &self.equal)?;
        s.end()
    }
}

/// Checks the scaling law for a concrete matrix and scale factor `c != 0`,
/// reporting both sides and the equality flag.
pub fn verify_scaling<K: Field>(
    g: &Matrix<K>,
    c: &K,
    spec: HankelSpec,
) -> Result<ScalingWitness<K>> {
    if c.is_zero() {
        return Err(Error::Precondition("scale factor must be nonzero".into()));
    }
    let exponent = (spec.t() * spec.l() + spec.t() * (spec.t() - 1)) as u64;
    let scaled_det = hankel_det(&g.scale(c), spec);
    let predicted = c.powu(exponent) * &hankel_det(g, spec);
    let equal = scaled_det == predicted;
    Ok(ScalingWitness {
        t: spec.t(),
        l: spec.l(),
        exponent,
        scaled_det,
        predicted,
        equal,
    })
}

/// One family determinant in the aggregate report.
#[derive(Clone, Debug, Serialize)]
pub struct HankelDetRecord {
    pub t: usize,
    pub l: usize,
    pub value: String,
}

/// Aggregate analysis of one matrix, serializable with deterministic field
/// order; scalars are rendered in the textual scalar format.
///
/// `degenerate` and `spectral_polynomial` are only populated in
/// characteristic 0; `oracle_agreement` additionally requires the
/// characteristic-polynomial oracle to be available (characteristic 0 or
/// p > n).
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub field: String,
    pub spectral_size: usize,
    pub degenerate: Option<bool>,
    pub spectral_polynomial: Option<Vec<String>>,
    pub hankel_determinants: Vec<HankelDetRecord>,
    pub oracle_agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Runs the full pipeline on one matrix and assembles the report record.
pub fn analyze<K: Field>(g: &Matrix<K>) -> Result<AnalysisReport> {
    let n = g.order();
    let ctx = g.context();
    let characteristic = K::characteristic(ctx);
    let data = scan(g);
    let m = data.size;

    let mut hankel_determinants: Vec<HankelDetRecord> = data
        .dets
        .iter()
        .enumerate()
        .map(|(i, det)| HankelDetRecord {
            t: i + 1,
            l: 0,
            value: det.to_string(),
        })
        .collect();

    let mut degenerate = None;
    let mut spectral_poly = None;
    if characteristic == 0 {
        let det_m1 = build_hankel(&data.traces, HankelSpec::new(m, 1).expect("m >= 1"))
            .expect("traces cover (m, 1)")
            .determinant();
        let is_degenerate = det_m1.is_zero();
        if is_degenerate != g.determinant().is_zero() {
            return Err(Error::InvariantViolation(
                "degeneracy verdicts disagree between det M_(m,1) and det G".into(),
            ));
        }
        hankel_determinants.push(HankelDetRecord {
            t: m,
            l: 1,
            value: det_m1.to_string(),
        });
        degenerate = Some(is_degenerate);
        spectral_poly = Some(
            spectral_polynomial(g)?
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
        );
    }

    let oracle_agreement = if characteristic == 0 || characteristic > n as u64 {
        Some(oracle_spectral_size(g)? == m)
    } else {
        None
    };

    let note = (characteristic != 0).then(|| {
        format!(
            "distinct-eigenvalue count over GF({characteristic}) is valid only if no \
             multiplicity is divisible by {characteristic} and the characteristic \
             polynomial is separable"
        )
    });

    Ok(AnalysisReport {
        order: n,
        field: K::describe(ctx),
        spectral_size: m,
        degenerate,
        spectral_polynomial: spectral_poly,
        hankel_determinants,
        oracle_agreement,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GfElement;
    use proptest::prelude::*;

    fn rat(n: i64) -> Rational {
        Rational::from_int((), n)
    }

    fn qmatrix(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| rat(c)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn qpoly(coeffs: &[i64]) -> Poly<Rational> {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn hspec(t: usize, l: usize) -> HankelSpec {
        HankelSpec::new(t, l).unwrap()
    }

    #[test]
    fn spectral_size_of_identity() {
        for n in 1..=4 {
            assert_eq!(spectral_size(&Matrix::<Rational>::identity(n, ())), 1);
        }
    }

    #[test]
    fn spectral_size_with_multiplicity() {
        let g = Matrix::diagonal(vec![rat(1), rat(1), rat(2)]);
        assert_eq!(spectral_size(&g), 2);
        assert_eq!(oracle_spectral_size(&g).unwrap(), 2);
    }

    #[test]
    fn spectral_size_needs_the_full_scan() {
        // Companion matrix of x^3 - 1: det M_{2,0} = 0 although the spectral
        // size is 3, so a first-zero scan would report 1.
        let g = qmatrix(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(hankel_det(&g, hspec(2, 0)), rat(0));
        assert_eq!(spectral_size(&g), 3);
        assert_eq!(oracle_spectral_size(&g).unwrap(), 3);
    }

    #[test]
    fn symmetric_scan_on_small_graphs() {
        // K_2 adjacency: eigenvalues +-1.
        let k2 = qmatrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(spectral_size_symmetric(&k2).unwrap(), 2);
        // Triangle adjacency: eigenvalues 2, -1, -1.
        let k3 = qmatrix(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(spectral_size_symmetric(&k3).unwrap(), 2);
        // Scalar matrix.
        let scal = Matrix::diagonal(vec![rat(5), rat(5), rat(5), rat(5)]);
        assert_eq!(spectral_size_symmetric(&scal).unwrap(), 1);
    }

    #[test]
    fn symmetric_scan_rejects_asymmetric_input() {
        let g = qmatrix(&[&[0, 1], &[0, 0]]);
        assert!(matches!(
            spectral_size_symmetric(&g),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn shifted_power_trace_examples() {
        let g = Matrix::diagonal(vec![rat(1), rat(2)]);
        let traces = g.power_traces(3);
        assert_eq!(shifted_power_trace(&traces, 0, 2).unwrap(), qpoly(&[2]));
        assert_eq!(shifted_power_trace(&traces, 1, 2).unwrap(), qpoly(&[-3, 2]));
        let g2 = Matrix::diagonal(vec![rat(1), rat(1), rat(2)]);
        let traces2 = g2.power_traces(3);
        // 2(x-1)^3 + (x-2)^3 = 3x^3 - 12x^2 + 18x - 10.
        assert_eq!(
            shifted_power_trace(&traces2, 3, 3).unwrap(),
            qpoly(&[-10, 18, -12, 3])
        );
    }

    #[test]
    fn shifted_power_trace_requires_enough_traces() {
        let traces = vec![rat(2), rat(3)];
        assert!(shifted_power_trace(&traces, 2, 2).is_err());
    }

    #[test]
    fn spectral_polynomial_with_multiplicity() {
        let g = Matrix::diagonal(vec![rat(1), rat(1), rat(2)]);
        assert_eq!(spectral_polynomial(&g).unwrap(), qpoly(&[2, -3, 1]));
    }

    #[test]
    fn spectral_polynomial_of_zero_and_identity() {
        for n in 1..=3 {
            let zero = Matrix::<Rational>::zero(n, ());
            assert_eq!(spectral_polynomial(&zero).unwrap(), qpoly(&[0, 1]));
            let id = Matrix::<Rational>::identity(n, ());
            assert_eq!(spectral_polynomial(&id).unwrap(), qpoly(&[-1, 1]));
        }
    }

    #[test]
    fn degeneracy_examples() {
        assert!(degeneracy_test(&Matrix::diagonal(vec![rat(0), rat(1)])).unwrap());
        assert!(!degeneracy_test(&Matrix::diagonal(vec![rat(1), rat(2)])).unwrap());
        assert!(degeneracy_test(&Matrix::<Rational>::zero(1, ())).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let companion = qmatrix(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(oracle_spectral_size(&companion).unwrap(), 3);
        let nilpotent = qmatrix(&[&[0, 1], &[0, 0]]);
        assert_eq!(oracle_spectral_size(&nilpotent).unwrap(), 1);
    }

    #[test]
    fn scaling_law_witnesses() {
        let g = Matrix::diagonal(vec![rat(1), rat(2)]);
        // (t,l) = (2,0): exponent 2, both sides 4.
        let w = verify_scaling(&g, &rat(2), hspec(2, 0)).unwrap();
        assert!(w.equal);
        assert_eq!(w.scaled_det, rat(4));
        assert_eq!(w.exponent, 2);
        // (t,l) = (1,1): exponent 1, both sides tr(2G) = 6 — not 12, which
        // the exponent 2 would predict.
        let w = verify_scaling(&g, &rat(2), hspec(1, 1)).unwrap();
        assert!(w.equal);
        assert_eq!(w.scaled_det, rat(6));
        assert_eq!(w.exponent, 1);
        assert_ne!(w.scaled_det, rat(12));
        // c = 1 is trivially invariant.
        let w = verify_scaling(&g, &rat(1), hspec(3, 2)).unwrap();
        assert!(w.equal);
    }

    #[test]
    fn scaling_rejects_zero_factor() {
        let g = Matrix::<Rational>::identity(2, ());
        assert!(verify_scaling(&g, &rat(0), hspec(1, 0)).is_err());
    }

    #[test]
    fn gf_paths_are_guarded() {
        let p = 7u64;
        let g = Matrix::from_fn(2, |i, j| GfElement::new((i + 2 * j) as i64, p));
        assert!(matches!(
            spectral_polynomial(&g),
            Err(Error::UnsupportedField(_))
        ));
        assert!(matches!(
            degeneracy_test(&g),
            Err(Error::UnsupportedField(_))
        ));
        // spectral_size itself stays available over GF(p).
        let _ = spectral_size(&g);
    }

    #[test]
    fn analyze_populates_the_record() {
        let report = analyze(&Matrix::diagonal(vec![rat(1), rat(2)])).unwrap();
        assert_eq!(report.order, 2);
        assert_eq!(report.field, "rational");
        assert_eq!(report.spectral_size, 2);
        assert_eq!(report.degenerate, Some(false));
        assert_eq!(
            report.spectral_polynomial,
            Some(vec!["2".into(), "-3".into(), "1".into()])
        );
        assert_eq!(report.oracle_agreement, Some(true));
        assert!(report.note.is_none());
        assert_eq!(report.hankel_determinants.len(), 3);
    }

    fn arb_int_matrix(max_order: usize) -> impl Strategy<Value = Matrix<Rational>> {
        (1..=max_order).prop_flat_map(|n| {
            prop::collection::vec(-5i64..=5, n * n)
                .prop_map(move |vals| Matrix::from_fn(n, |i, j| rat(vals[i * n + j])))
        })
    }

    fn arb_symmetric_matrix(max_order: usize) -> impl Strategy<Value = Matrix<Rational>> {
        (1..=max_order).prop_flat_map(|n| {
            prop::collection::vec(-5i64..=5, n * n).prop_map(move |vals| {
                Matrix::from_fn(n, |i, j| {
                    let (a, b) = if i <= j { (i, j) } else { (j, i) };
                    rat(vals[a * n + b])
                })
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn spectral_size_agrees_with_oracle(g in arb_int_matrix(5)) {
            prop_assert_eq!(spectral_size(&g), oracle_spectral_size(&g).unwrap());
        }

        #[test]
        fn spectral_polynomial_agrees_with_oracle(g in arb_int_matrix(4)) {
            let direct = spectral_polynomial(&g).unwrap();
            let oracle = g.char_poly().unwrap().squarefree_part().unwrap();
            prop_assert_eq!(direct, oracle);
        }

        /// For symmetric rational matrices the spectral polynomial is the
        /// minimal polynomial, so substituting the matrix yields zero.
        #[test]
        fn spectral_polynomial_annihilates_symmetric_matrices(
            g in arb_symmetric_matrix(4)
        ) {
            let p = spectral_polynomial(&g).unwrap();
            let n = g.order();
            prop_assert_eq!(g.eval_poly(&p), Matrix::zero(n, ()));
        }

        /// Positivity of the scan determinants for symmetric matrices, then
        /// exact zero beyond the spectral size.
        #[test]
        fn symmetric_scan_determinants_are_positive(g in arb_symmetric_matrix(4)) {
            let m = spectral_size(&g);
            prop_assert_eq!(spectral_size_symmetric(&g).unwrap(), m);
            for t in 1..=g.order() {
                let det = hankel_det(&g, hspec(t, 0));
                if t <= m {
                    prop_assert!(is_positive_rational(&det));
                } else {
                    prop_assert!(det.is_zero());
                }
            }
        }

        /// det M_{m,l} = (product of distinct eigenvalues)^l * det M_m,
        /// with the product read off the spectral polynomial's constant
        /// term.
        #[test]
        fn product_identity_via_spectral_polynomial(g in arb_int_matrix(4)) {
            let m = spectral_size(&g);
            let p = spectral_polynomial(&g).unwrap();
            let c0 = p.coeffs()[0].clone();
            let eigen_product = if m % 2 == 0 { c0 } else { -c0 };
            let base = hankel_det(&g, hspec(m, 0));
            for l in 0..=3usize {
                prop_assert_eq!(
                    hankel_det(&g, hspec(m, l)),
                    eigen_product.powu(l as u64) * &base
                );
            }
        }
    }
}
