use finaut::data::table_ids;
use finaut::{verify_table, Caps, Filter, Status};

#[test]
fn every_table_verifies_on_default_rows() {
    for id in table_ids() {
        let r = verify_table(id, &Filter::default(), &Caps::default()).unwrap();
        let failed: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).map(|c| (&c.id, &c.field, &c.computed)).collect();
        assert!(failed.is_empty(), "{}: {:?}", id, failed);
        assert!(r.summary.pass > 0, "{}", id);
    }
}

#[test]
fn informational_cells_are_only_the_disputed_ones() {
    let mut seen = Vec::new();
    for id in table_ids() {
        let r = verify_table(id, &Filter::default(), &Caps::default()).unwrap();
        for c in r.checks.iter().filter(|c| c.status == Status::Informational) {
            assert!(c.note.is_some() || id == "tableA2", "{} {}", c.id, c.field);
            seen.push(format!("{} {}", c.id, c.field));
        }
    }
    seen.sort();
    assert_eq!(
        seen,
        [
            "table2a/M16 a C2 aut_order",
            "table2a/M16 a C2 label",
            "tableA1/p=5 classes.4",
            "tableA1/p=97 classes.16",
            "tableA2/p=17 subgroups32",
            "tableA2/p=41 subgroups32",
            "tableA4/p=31 solutions",
        ]
    );
}
