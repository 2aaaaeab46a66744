use proptest::prelude::*;
use qrep::indec::reflection_functor;
use qrep::rep::{ext_dim, hom_dim};
use qrep::{DynkinType, IndecTable, ModuleClass, Representation};

fn types() -> impl Strategy<Value = DynkinType> {
    prop::sample::select(vec![DynkinType::a(3), DynkinType::a(4), DynkinType::d(4), DynkinType::d(5)])
}

fn oriented_table() -> impl Strategy<Value = IndecTable> {
    (types(), any::<u64>()).prop_map(|(ty, bits)| {
        let q = ty.orientation(bits % (1 << ty.edges().len()));
        IndecTable::build(&q).unwrap()
    })
}

fn class(t: &IndecTable, picks: &[usize]) -> ModuleClass {
    let mut c = ModuleClass::new();
    for &i in picks {
        c.add(i % t.len(), 1);
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_and_ext_are_additive(t in oriented_table(), xs in prop::collection::vec(any::<usize>(), 1..4), ys in prop::collection::vec(any::<usize>(), 1..4)) {
        let (x, y) = (class(&t, &xs), class(&t, &ys));
        let (mx, my) = (t.module(&x), t.module(&y));
        let t = &t;
        let hom: usize = x.iter().flat_map(|(i, a)| y.iter().map(move |(j, b)| a * b * t.hom(i, j))).sum();
        let ext: usize = x.iter().flat_map(|(i, a)| y.iter().map(move |(j, b)| a * b * t.ext(i, j))).sum();
        prop_assert_eq!(hom_dim(&mx, &my), hom);
        prop_assert_eq!(ext_dim(&mx, &my), ext);
    }

    #[test]
    fn decompose_inverts_direct_sum(t in oriented_table(), xs in prop::collection::vec(any::<usize>(), 0..5)) {
        let c = class(&t, &xs);
        let parts: Vec<&Representation> = c.iter().flat_map(|(i, m)| std::iter::repeat_n(t.indec(i), m)).collect();
        let m = Representation::direct_sum(t.quiver(), t.field(), &parts);
        prop_assert_eq!(t.decompose(&m).unwrap(), c);
    }

    #[test]
    fn reflection_keeps_hom_and_ext(t in oriented_table(), v in any::<usize>()) {
        let q = t.quiver();
        let sinks: Vec<usize> = (0..q.vertex_count()).filter(|&s| q.is_sink(s)).collect();
        let v = sinks[v % sinks.len()];
        let simple = t.simple_index(v);
        let keep: Vec<usize> = (0..t.len()).filter(|&i| i != simple).collect();
        let images: Vec<Representation> = keep.iter().map(|&i| reflection_functor(t.indec(i), v).unwrap()).collect();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                prop_assert_eq!(hom_dim(&images[a], &images[b]), t.hom(i, j));
                prop_assert_eq!(ext_dim(&images[a], &images[b]), t.ext(i, j));
            }
        }
    }
}
