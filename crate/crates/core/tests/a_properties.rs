mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sqg::poincare::{poincare_cells, poincare_formula, q_multinomial};
use sqg::repcore::{decompose_simple, ext_dim, ext_dim_rep, hom_dim, hom_dim_rep, DimVector, Instance, Representation};
use sqg::schubert::{bruhat_leq, build_frame, cell_dimension, enumerate_fixed_points, Guard};
use sqg::verify::random_instance;
use sqg::Poly;

fn sample(seed: u64, max_n: usize, max_summands: usize) -> Instance {
    random_instance(&mut ChaCha8Rng::seed_from_u64(seed), max_n, max_summands)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bruhat_is_a_partial_order(seed in any::<u64>()) {
        let inst = sample(seed, 4, 6);
        let frame = build_frame(&inst).unwrap();
        let chains = enumerate_fixed_points(&frame, Guard::default()).unwrap();
        for a in &chains {
            prop_assert!(bruhat_leq(a, a));
            for b in &chains {
                if bruhat_leq(a, b) && bruhat_leq(b, a) {
                    prop_assert_eq!(a, b);
                }
                if bruhat_leq(a, b) && a != b {
                    prop_assert!(cell_dimension(a) < cell_dimension(b));
                }
                for c in &chains {
                    if bruhat_leq(a, b) && bruhat_leq(b, c) {
                        prop_assert!(bruhat_leq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_points_match_brute_force(seed in any::<u64>()) {
        let inst = sample(seed, 5, 7);
        let frame = build_frame(&inst).unwrap();
        let chains = enumerate_fixed_points(&frame, Guard::default()).unwrap();
        let brute = brute_fixed_points(inst.n(), &inst.rep().triples(), inst.e());
        let mut brute_levels: Vec<Vec<Vec<usize>>> = brute.iter().map(|c| levels(c)).collect();
        brute_levels.sort();
        let lib: Vec<Vec<Vec<usize>>> = chains.iter().map(|c| c.sets().to_vec()).collect();
        prop_assert_eq!(lib, brute_levels);
        for c in &chains {
            prop_assert_eq!(cell_dimension(c), chain_inversions(frame.big_n(), c.sets()));
        }
    }

    #[test]
    fn product_over_simple_factors(seed in any::<u64>()) {
        let inst = sample(seed, 6, 8);
        let total = brute_fixed_points(inst.n(), &inst.rep().triples(), inst.e()).len();
        match decompose_simple(&inst) {
            Err(_) => prop_assert_eq!(total, 0),
            Ok(factors) => {
                let product: usize = factors
                    .iter()
                    .map(|f| brute_fixed_points(f.instance.n(), &f.instance.rep().triples(), f.instance.e()).len())
                    .product();
                prop_assert_eq!(product, total);
            }
        }
    }

    #[test]
    fn formula_matches_cells_beyond_the_sweep(seed in any::<u64>()) {
        let inst = sample(seed, 6, 9);
        let formula: Poly = poincare_formula(&inst, Guard::default()).unwrap();
        let cells: Poly = poincare_cells(&build_frame(&inst).unwrap(), Guard::default()).unwrap();
        prop_assert_eq!(formula, cells);
    }

    /// A single interval with multiplicity has no Q-constraint: the
    /// Grassmannian is the flag variety of type `e`.
    #[test]
    fn single_interval_gives_flag_variety(n in 1usize..4, mult in 1usize..7, raw in prop::collection::vec(0usize..7, 3)) {
        let mut e: Vec<usize> = raw.into_iter().take(n).map(|x| x.min(mult)).collect();
        e.sort_unstable();
        let rep = Representation::from_triples(n, &[(1, n, mult)]).unwrap();
        let inst = Instance::new(rep, DimVector::new(e.clone())).unwrap();
        let formula: Poly = poincare_formula(&inst, Guard::default()).unwrap();
        let lib: Poly = q_multinomial(mult, &e).unwrap();
        prop_assert_eq!(&formula, &lib);
        let oracle = flag_polynomial(mult, &e);
        prop_assert_eq!(formula.coeffs(), oracle.as_slice());
    }

    #[test]
    fn hom_ext_additive_over_summands(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = sample(s1, 4, 4);
        let b = (0..).map(|k| sample(s2.wrapping_add(k), 4, 4)).find(|b| b.n() == a.n()).unwrap();
        let n = a.n();
        let (mut hom, mut ext) = (0, 0);
        for (x, m) in a.rep().summands() {
            for (y, k) in b.rep().summands() {
                let (h, e) = hom_ext_linear_algebra(n, (x.start(), x.end()), (y.start(), y.end()));
                prop_assert_eq!((h, e), (hom_dim(&x, &y), ext_dim(&x, &y)));
                hom += m * k * h;
                ext += m * k * e;
            }
        }
        prop_assert_eq!(hom_dim_rep(a.rep(), b.rep()), hom);
        prop_assert_eq!(ext_dim_rep(a.rep(), b.rep()), ext);
    }
}
