use diagram_core::{Generator, LinCombo};
use exact_algebra::{int, ParamPoly, Rational};
use proptest::prelude::*;
use reduction_engine::Ctx;
use relation_generators::*;

fn ctx() -> Ctx {
    cyclic_ctx(Some(int(1)), 2).unwrap()
}

fn to_combo(row: &[i64]) -> LinCombo {
    let mut c = LinCombo::zero();
    for (g, &x) in [Generator::H1, Generator::H2, Generator::H3, Generator::H4].iter().zip(row) {
        if x != 0 {
            c.add_canonical(g.diagram(), &ParamPoly::from_int(x));
        }
    }
    c
}

proptest! {
    #[test]
    fn combinations_of_rows_reduce_to_zero(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..4),
        weights in prop::collection::vec(-4i64..=4, 4),
    ) {
        let combos: Vec<LinCombo> = rows.iter().map(|r| to_combo(r)).collect();
        let mut v = LinCombo::zero();
        for (c, w) in combos.iter().zip(&weights) {
            v.add_combo(c, &ParamPoly::from_int(*w));
        }
        prop_assert!(reduce_against(&v, &combos, &ColumnOrder::default(), &ctx()).is_zero());
    }

    #[test]
    fn echelon_length_is_rank(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..5)) {
        let combos: Vec<LinCombo> = rows.iter().map(|r| to_combo(r)).collect();
        let m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        prop_assert_eq!(echelon(&combos, &ColumnOrder::default(), &ctx()).len(), rational_rank(m));
    }
}
