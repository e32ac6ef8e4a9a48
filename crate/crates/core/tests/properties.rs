use kneser_core::arrays::{intersection_numbers, IntersectionArray, IntersectionNumbers};
use kneser_core::catalog::eval_expr;
use kneser_core::kneser::{equal_pairs, kneser_spectrum};
use kneser_core::linalg::{jacobi, Matrix};
use kneser_core::polybasis::{expand_in_distance_basis, root_product, trace_pairing};
use kneser_core::{Analysis, Tolerance};
use proptest::prelude::*;

/// Arrays with `b` non-increasing, `c` non-decreasing, `c_1 = 1` and `b_i + c_i <= k`.
fn arrays() -> impl Strategy<Value = IntersectionArray> {
    (1usize..=5, 2i64..=10)
        .prop_flat_map(|(d, k)| (Just(d), Just(k), prop::collection::vec((0u32..100, 0u32..100), d)))
        .prop_map(|(d, k, raw)| {
            let mut b = vec![k];
            let mut c = vec![1i64];
            for i in 1..d {
                let (rb, rc) = raw[i];
                let ci = c[i - 1];
                b.push(1 + rb as i64 % b[i - 1].min(k - ci));
                // c_d may reach k, earlier c_i stay below it
                let top = if i + 1 == d { k } else { k - 1 };
                c.push(ci + rc as i64 % (top - ci + 1));
            }
            IntersectionArray::from_ints(&b, &c).unwrap()
        })
}

fn analysis(arr: &IntersectionArray) -> Analysis {
    Analysis::new(arr.clone(), Tolerance::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn valencies_sum_to_n(arr in arrays()) {
        let d = arr.diameter();
        let total: f64 = (0..=d).map(|i| arr.k(i)).sum();
        prop_assert!((total - arr.n()).abs() <= 1e-9 * arr.n());
        for i in 0..=d {
            prop_assert!((arr.a(i) + arr.b(i) + arr.c(i) - arr.valency()).abs() < 1e-12);
        }
    }

    #[test]
    fn spectral_identities(arr in arrays()) {
        let an = analysis(&arr);
        let d = an.diameter();
        prop_assert_eq!(an.theta(0), arr.valency());
        let msum: f64 = (0..=d).map(|i| an.m(i)).sum();
        prop_assert!((msum - arr.n()).abs() <= 1e-8 * arr.n());
        prop_assert!((0..=d).all(|i| an.m(i) > 0.0));
        prop_assert!((0..d).all(|i| an.theta(i) > an.theta(i + 1)));
        let ids = an.identities();
        prop_assert!(ids.holds, "{:?}", ids.witnesses.iter().filter(|w| !w.holds()).collect::<Vec<_>>());
    }

    #[test]
    fn pq_is_n_times_identity(arr in arrays()) {
        let an = analysis(&arr);
        let s = an.diameter() + 1;
        let n = arr.n();
        for i in 0..s {
            for j in 0..s {
                let v: f64 = (0..s).map(|l| an.p.get(i, l) * an.q.get(l, j)).sum();
                let want = if i == j { n } else { 0.0 };
                prop_assert!((v - want).abs() <= 1e-7 * n, "({i},{j}) {v}");
            }
        }
    }

    #[test]
    fn row_and_column_sign_changes(arr in arrays()) {
        let an = analysis(&arr);
        prop_assert!(an.sign_changes().passes());
    }

    #[test]
    fn zeros_interlace(arr in arrays()) {
        let an = analysis(&arr);
        prop_assert!(an.interlacing().unwrap());
    }

    #[test]
    fn eigenvalues_ignore_c_last(arr in arrays(), c_last in 0.25f64..50.0) {
        let an = analysis(&arr);
        let dev = an.c_last_sensitivity(c_last).unwrap();
        prop_assert!(dev <= 1e-10 * arr.valency().max(1.0), "{dev}");
    }

    #[test]
    fn intersection_number_symmetries(arr in arrays()) {
        let exact = IntersectionNumbers::exact(&arr);
        prop_assert!(exact.identity_failures(&arr).is_empty());
        let an = analysis(&arr);
        let spectral = intersection_numbers(&an).unwrap();
        prop_assert!(spectral.route_deviation <= 1e-6 * arr.n(), "{}", spectral.route_deviation);
    }

    #[test]
    fn distance_basis_reproduces_p(arr in arrays(), j in 0usize..6) {
        let an = analysis(&arr);
        let d = an.diameter();
        let j = j % (d + 1);
        let set: Vec<usize> = (0..=d).filter(|&x| x != j).collect();
        let f = root_product(&an, &set);
        let e = expand_in_distance_basis(&f, &an).unwrap();
        prop_assert!(e.evaluation_consistency(&f, &an).holds);
        for i in 0..=d {
            let t = trace_pairing(i, &f, &an).unwrap();
            prop_assert!(t.witness.holds(), "{:?}", t.witness);
        }
    }

    #[test]
    fn pair_criteria_agree_with_direct_comparison(arr in arrays()) {
        let an = analysis(&arr);
        let pairs = equal_pairs(&an);
        prop_assert!(pairs.disagreements.is_empty(), "{:?}", pairs.disagreements);
        let report = kneser_spectrum(&an, true).unwrap();
        prop_assert!(report.disagreements.is_empty(), "{:?}", report.disagreements);
    }

    #[test]
    fn array_text_round_trips(arr in arrays()) {
        let again = IntersectionArray::parse(&arr.to_string()).unwrap();
        prop_assert_eq!(again, arr);
    }

    #[test]
    fn jacobi_diagonalizes(entries in prop::collection::vec(-5.0f64..5.0, 36)) {
        let n = 6;
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, entries[i * n + j]);
                m.set(j, i, entries[i * n + j]);
            }
        }
        let sys = jacobi(&m).unwrap();
        for x in 0..n {
            for i in 0..n {
                let av: f64 = (0..n).map(|j| m.get(i, j) * sys.vectors.get(j, x)).sum();
                prop_assert!((av - sys.values[x] * sys.vectors.get(i, x)).abs() < 1e-8);
            }
        }
        prop_assert!(sys.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn expressions_match_arithmetic(a in 1u32..1000, b in 1u32..1000) {
        let v = eval_expr(&format!("({a} - sqrt({b})) / {b}")).unwrap();
        prop_assert!((v - (a as f64 - (b as f64).sqrt()) / b as f64).abs() < 1e-12);
    }
}
