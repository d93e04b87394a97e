use hfmap::coords::{apply, cusp_of, normalize, Kind};
use hfmap::exact::{Cusp, ExactMatrix, QuadInt};
use hfmap::group::{parity, FiniteHeckeGroup, HeckeParams};
use hfmap::render::universal_geodesics;
use proptest::prelude::*;

fn params() -> impl Strategy<Value = HeckeParams> {
    prop::sample::select(vec![(3, 5), (3, 7), (4, 3), (4, 5), (4, 7), (6, 5), (6, 7)])
        .prop_map(|(q, n)| HeckeParams::new(q, n).unwrap())
}

fn word() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 0..24)
}

/// Index of the element spelled by `w` in `S`, `T`, `T⁻¹`.
fn element(g: &FiniteHeckeGroup, w: &[u8]) -> usize {
    let t_inv = g.inv(g.gen_t());
    w.iter().fold(g.identity(), |acc, &c| match c {
        0 => g.times_s(acc),
        1 => g.times_t(acc),
        _ => g.mul(acc, t_inv),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normalize_is_sign_invariant_and_idempotent(p in params(), a in -40i64..40, c in -40i64..40, b in any::<bool>()) {
        let kind = if b && p.has_parity() { Kind::B } else { Kind::A };
        match normalize(kind, a, c, &p) {
            Ok(u) => {
                prop_assert_eq!(normalize(kind, -a, -c, &p).unwrap(), u);
                prop_assert_eq!(normalize(kind, u.num as i64, u.den as i64, &p).unwrap(), u);
                prop_assert!(u.num < p.n() && u.den < p.n());
            }
            Err(_) => prop_assert!(normalize(kind, -a, -c, &p).is_err()),
        }
    }

    #[test]
    fn cusp_map_is_equivariant(p in params(), w1 in word(), w2 in word()) {
        let g = FiniteHeckeGroup::enumerate(p).unwrap();
        let (x, y) = (element(&g, &w1), element(&g, &w2));
        let xy = g.mul(x, y);
        let lhs = apply(g.element(x), &cusp_of(g.element(y), &p).unwrap(), &p).unwrap();
        prop_assert_eq!(lhs, cusp_of(g.element(xy), &p).unwrap());
    }

    #[test]
    fn parity_is_a_homomorphism(p in params().prop_filter("parity", |p| p.has_parity()), w1 in word(), w2 in word()) {
        let g = FiniteHeckeGroup::enumerate(p).unwrap();
        let (x, y) = (element(&g, &w1), element(&g, &w2));
        let px = parity(g.element(x), &p).unwrap();
        let py = parity(g.element(y), &p).unwrap();
        prop_assert_eq!(parity(g.element(g.mul(x, y)), &p).unwrap(), px.compose(py));
    }

    #[test]
    fn exact_action_inverts(m in prop::sample::select(vec![1i128, 2, 3]), w in word(), r in -9i128..9, i in -9i128..9, d in 1i128..9) {
        let x = Cusp::ratio(QuadInt::new(r, if m == 1 { 0 } else { i }), QuadInt::new(d, 0), m);
        let g = w.iter().fold(ExactMatrix::IDENTITY, |acc, &c| {
            let step = match c {
                0 => ExactMatrix::s(),
                1 => ExactMatrix::t(m),
                _ => ExactMatrix::t(m).inv(),
            };
            acc.mul(&step, m)
        });
        prop_assert_eq!(g.det(m), QuadInt::ONE);
        prop_assert_eq!(g.inv().act(&g.act(&x, m), m), x);
    }

    #[test]
    fn deeper_renders_extend_shallower(q in prop::sample::select(vec![3u32, 4, 6]), d in 0usize..7) {
        let a = universal_geodesics(q, d).unwrap();
        let b = universal_geodesics(q, d + 1).unwrap();
        prop_assert!(b.len() > a.len());
        prop_assert_eq!(&b[..a.len()], &a[..]);
    }
}
