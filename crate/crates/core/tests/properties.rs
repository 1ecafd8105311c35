use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use socle::convert::{
    duallr_to_hom, duallr_to_socle, hom_to_duallr, hom_to_socle, socle_multiplicity_from_hom, socle_to_duallr,
    socle_to_hom,
};
use socle::embedding::{hom_space, random_embedding};
use socle::partition::{shapes_up_to, skew_cells};
use socle::realize::realize_socle;
use socle::switching::{init_switch, run_switch, terminal_tableau, Owner, SwitchOrder};
use socle::tableau::{check, check_lr, check_socle, enumerate, from_chain, to_chain};
use socle::{Embedding, FpModule, Matrix, Partition, ShapeTriple, SkewTableau, Subspace, TableauKind};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..=12, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.retain(|&x| x > 0);
        Partition::new(v).unwrap()
    })
}

fn small_partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|n| {
        let all = socle::partition::partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn embedding(max_weight: usize) -> impl Strategy<Value = Embedding> {
    (any::<u64>(), prop::sample::select(vec![2u32, 3]))
        .prop_map(move |(seed, p)| random_embedding(&mut ChaCha8Rng::seed_from_u64(seed), p, max_weight).unwrap())
}

fn socle_tableaux(max_weight: usize) -> Vec<SkewTableau> {
    shapes_up_to(max_weight)
        .iter()
        .flat_map(|s| enumerate(s, TableauKind::Socle))
        .collect()
}

fn socle_tableau(max_weight: usize) -> impl Strategy<Value = SkewTableau> {
    let all = socle_tableaux(max_weight);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn shape(max_weight: usize) -> impl Strategy<Value = ShapeTriple> {
    let all = shapes_up_to(max_weight);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transpose_is_an_involution(p in partition()) {
        prop_assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn skew_cells_count(outer in partition(), inner in partition()) {
        if let Ok(cells) = skew_cells(&outer, &inner) {
            prop_assert_eq!(cells.len(), outer.weight() - inner.weight());
        } else {
            prop_assert!(!outer.contains(&inner));
        }
    }

    #[test]
    fn containment_is_a_partial_order(a in partition(), b in partition(), c in partition()) {
        prop_assert!(a.contains(&a));
        if a.contains(&b) && b.contains(&a) {
            prop_assert_eq!(&a, &b);
        }
        if a.contains(&b) && b.contains(&c) {
            prop_assert!(a.contains(&c));
        }
    }

    #[test]
    fn chains_round_trip(s in shape(8)) {
        for kind in [TableauKind::Socle, TableauKind::Lr] {
            let ts = enumerate(&s, kind);
            let distinct: HashSet<Vec<Vec<usize>>> = ts.iter().map(SkewTableau::to_grid).collect();
            prop_assert_eq!(distinct.len(), ts.len());
            for t in ts {
                prop_assert!(check(&t, kind));
                let chain = to_chain(&t, kind).unwrap();
                prop_assert_eq!(from_chain(&chain).unwrap(), t);
            }
        }
    }

    #[test]
    fn standard_module_type(lambda in small_partition(12), p in prop::sample::select(vec![2u32, 3])) {
        prop_assert_eq!(FpModule::standard(p, &lambda).unwrap().module_type(), lambda);
    }

    #[test]
    fn submodule_and_quotient_dimensions(x in embedding(10), r in 0usize..4, l in 0usize..4) {
        let b = x.ambient();
        let a = x.sub();
        let q = b.quotient_type(a).unwrap();
        prop_assert_eq!(q.weight() + a.dim(), b.dim());
        prop_assert!(b.rad_layer(&b.preimage(a, r), r).is_subspace_of(a));
        let zero = b.zero_submodule();
        prop_assert_eq!(b.soc_layer(a, l), b.preimage(&zero, l).intersect(a));
    }

    #[test]
    fn multiplication_by_p_is_a_monomorphism(x in embedding(10)) {
        let b = x.ambient();
        let a = x.sub();
        let soc = |l: usize| b.soc_layer(a, l);
        let rad = |s: usize| b.rad_layer(&b.whole(), s);
        let layer = |l: usize, s: usize| soc(l).intersect(&rad(s)).dim() as i64 - soc(l - 1).intersect(&rad(s)).dim() as i64;
        for l in 2..=x.alpha().first().max(2) {
            for s in 1..=x.beta().first() {
                prop_assert!(layer(l, s - 1) <= layer(l - 1, s), "l={} s={}", l, s);
            }
        }
    }

    #[test]
    fn embedding_invariants(x in embedding(10)) {
        let sigma = x.socle_tableau();
        let gamma = x.lr_tableau();
        prop_assert!(check_socle(&sigma));
        prop_assert!(check_lr(&gamma));
        for l in 1..=x.alpha().first() {
            for r in 1..=x.beta().first() {
                let below: usize = (r..=x.beta().first()).map(|q| sigma.multiplicity(l, q)).sum();
                prop_assert_eq!(x.entries_below(l, r), below);
            }
        }
        let gamma_dual = x.dual().lr_tableau();
        prop_assert_eq!(&socle_to_duallr(&sigma).unwrap(), &gamma_dual);
        prop_assert_eq!(duallr_to_socle(&gamma_dual).unwrap(), sigma);
    }

    #[test]
    fn hom_dims_are_isomorphism_invariant(x in embedding(7), seed in any::<u64>()) {
        let p = x.prime();
        let b = Embedding::new(x.ambient().clone(), Subspace::zero(p, x.ambient().dim())).unwrap();
        let basis = hom_space(&b, &b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = x.ambient().dim();
        let mut g = Matrix::zeros(p, n, n);
        for f in &basis {
            g = g.add(&f.scale(rng.gen_range(0..p)));
        }
        prop_assume!(g.rank() == n);
        let y = x.transport(&g).unwrap();
        prop_assert_eq!(y.shape(), x.shape());
        prop_assert_eq!(y.hom_matrix(), x.hom_matrix());
        prop_assert_eq!(y.socle_tableau(), x.socle_tableau());
    }

    #[test]
    fn defect_expression_is_nonnegative(x in embedding(8)) {
        let h = x.hom_matrix();
        let top = x.beta().first() + x.alpha().first();
        for l in 1..=top {
            for r in 1..=top - l {
                prop_assert!(socle_multiplicity_from_hom(&h, l, r) >= 0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn realization_types(sigma in socle_tableau(9), p in prop::sample::select(vec![2u32, 3])) {
        let x = realize_socle(&sigma, p).unwrap();
        prop_assert_eq!(x.sub().dim(), sigma.shape().alpha.weight());
        prop_assert_eq!(x.ambient().quotient_type(x.sub()).unwrap(), sigma.shape().gamma.clone());
        prop_assert_eq!(x.socle_tableau(), sigma);
    }

    #[test]
    fn conversion_paths_commute(sigma in socle_tableau(10)) {
        let h = socle_to_hom(&sigma).unwrap();
        let g = socle_to_duallr(&sigma).unwrap();
        prop_assert_eq!(&hom_to_duallr(&h).unwrap(), &g);
        prop_assert_eq!(&duallr_to_hom(&g).unwrap(), &h);
        prop_assert_eq!(&hom_to_socle(&h).unwrap(), &sigma);
        prop_assert_eq!(duallr_to_socle(&g).unwrap(), sigma);
    }

    #[test]
    fn json_round_trips(sigma in socle_tableau(9), x in embedding(8)) {
        let text = sigma.to_json();
        let back = SkewTableau::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        let h = socle_to_hom(&sigma).unwrap();
        prop_assert_eq!(socle::HomMatrix::from_json(&h.to_json()).unwrap().to_json(), h.to_json());
        let e = x.to_json().unwrap();
        let y = Embedding::from_json(&e).unwrap();
        prop_assert_eq!(y.to_json().unwrap(), e);
        prop_assert_eq!(y, x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    // 50 tableaux x 10 orders = 500 seeded orders.
    #[test]
    fn switching_is_order_independent(sigma in socle_tableau(9), base in any::<u64>()) {
        let start = init_switch(&sigma).unwrap();
        let content = |st: &socle::SwitchState, o: Owner| {
            let mut m: BTreeMap<usize, usize> = BTreeMap::new();
            for (_, owner, e) in st.cells() {
                if owner == o {
                    *m.entry(e).or_default() += 1;
                }
            }
            m
        };
        let reference = run_switch(start.clone(), SwitchOrder::Deterministic).unwrap();
        let guard = sigma.shape().beta.weight().pow(2) * sigma.shape().alpha.first().max(1);
        prop_assert!(reference.history().len() <= guard);
        prop_assert!(terminal_tableau(&reference, sigma.shape()).is_ok());
        for k in 0..10u64 {
            let end = run_switch(start.clone(), SwitchOrder::Seeded(base.wrapping_add(k))).unwrap();
            prop_assert_eq!(content(&end, Owner::S), content(&start, Owner::S));
            prop_assert_eq!(content(&end, Owner::T), content(&start, Owner::T));
            prop_assert_eq!(end.to_grid(), reference.to_grid());
            prop_assert_eq!(end.history().len(), reference.history().len());
        }
    }
}
