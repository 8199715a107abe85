use dmx::format::{
    parse, parse_dm, parse_label_list, parse_rg, write_dm, write_gf2, write_gf2sym, write_rg,
    DmKind, Document,
};
use dmx_core::verify::corpus::ribbon_corpus;
use dmx_core::{Gf2Matrix, Gf2SymmetricMatrix, GroundSet, SetSystem, Subset};
use proptest::prelude::*;

fn system() -> impl Strategy<Value = SetSystem> {
    (0usize..=6).prop_flat_map(|n| {
        prop::collection::vec(0u32..1 << n, 0..20).prop_map(move |raw| {
            let labels = (0..n).map(|i| format!("x{}", n - i)).collect();
            SetSystem::new(GroundSet::new(labels).unwrap(), raw.into_iter().map(Subset)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn dm_round_trip(s in system(), matroid in any::<bool>()) {
        let kind = if matroid { DmKind::Matroid } else { DmKind::DeltaMatroid };
        let text = write_dm(&s, kind);
        let back = parse_dm(&text).unwrap();
        prop_assert_eq!(&back.system, &s);
        prop_assert_eq!(back.kind, kind);
        prop_assert_eq!(write_dm(&back.system, kind), text);
    }

    #[test]
    fn gf2sym_round_trip(n in 0usize..6, code in any::<u64>()) {
        let a = Gf2SymmetricMatrix::from_code(n, code & ((1 << (n * (n + 1) / 2)) - 1));
        prop_assert_eq!(parse(&write_gf2sym(&a)).unwrap(), Document::Symmetric(a));
    }

    #[test]
    fn gf2_round_trip(cols in 1usize..7, rows in prop::collection::vec(any::<u32>(), 0..5)) {
        let data = rows.into_iter().map(|r| r & ((1 << cols) - 1)).collect();
        let b = Gf2Matrix::new(cols, data).unwrap();
        prop_assert_eq!(parse(&write_gf2(&b)).unwrap(), Document::Matrix(b));
    }
}

#[test]
fn feasible_line_order_and_repeats_do_not_matter() {
    let a = parse_dm("ground: a b c\nfeasible: {a,c}\nfeasible: {}\nfeasible: {c, a}\n").unwrap();
    let b = parse_dm("# comment\n\nground: a b c\nfeasible: {}\nfeasible: {a,c}\n").unwrap();
    assert_eq!(a, b);
    assert_eq!(
        write_dm(&a.system, a.kind),
        "ground: a b c\nfeasible: {}\nfeasible: {a,c}\n"
    );
}

#[test]
fn ribbon_corpus_round_trips() {
    for (name, g) in ribbon_corpus().unwrap() {
        let text = write_rg(&g);
        assert_eq!(parse_rg(&text).unwrap(), g, "{name}");
    }
}

#[test]
fn format_is_detected_from_the_first_line() {
    assert!(matches!(parse("gf2sym 1\n1\n"), Ok(Document::Symmetric(_))));
    assert!(matches!(parse("gf2 1 2\n10\n"), Ok(Document::Matrix(_))));
    assert!(matches!(
        parse("vertex: a b\nedge: e a b -\n"),
        Ok(Document::Ribbon(_))
    ));
    assert!(matches!(
        parse("ground:\nfeasible: {}\n"),
        Ok(Document::Dm(_))
    ));
}

fn at(src: &str) -> (usize, usize, String) {
    let e = parse(src).unwrap_err();
    (e.line, e.column, e.message)
}

#[test]
fn diagnostics_carry_line_and_column() {
    assert_eq!(
        at("ground: 1 2\nfeasible: {1,3}\n"),
        (2, 14, "unknown label `3`".into())
    );
    assert_eq!(at("feasible: {}\n").0, 1);
    assert_eq!(
        at("ground: 1\nbases: {1}\n"),
        (2, 1, "unknown key `bases`".into())
    );
    assert_eq!(at("ground: 1\nfeasible: 1\n").1, 11);
    assert_eq!(
        at("gf2sym 2\n01\n00\n").2,
        "matrix is not symmetric at (0, 1)"
    );
    assert_eq!(
        at("gf2 2 2\n01\n"),
        (3, 1, "expected 2 rows, found 1".into())
    );
    assert_eq!(
        at("vertex: a b\nedge: e a c +\n"),
        (2, 11, "half-edge `c` is on no vertex".into())
    );
    assert_eq!(
        at("vertex: a b c\nedge: e a b +\n"),
        (1, 13, "half-edge `c` belongs to no edge".into())
    );
    assert_eq!(at("vertex: a b\nedge: e a b x\n").1, 13);
}

#[test]
fn label_lists() {
    let g = GroundSet::new(vec!["a".into(), "b".into(), "c".into()]).unwrap();
    assert_eq!(parse_label_list(&g, "a,c").unwrap(), Subset(0b101));
    assert_eq!(parse_label_list(&g, " c , b ").unwrap(), Subset(0b110));
    assert_eq!(parse_label_list(&g, "").unwrap(), Subset::EMPTY);
    assert!(parse_label_list(&g, "a,z").is_err());
    assert!(parse_label_list(&g, "a,a").is_err());
}
