//! Golden outputs: the canonical text and JSON forms are part of the
//! tool's contract, so fixed inputs must produce these exact bytes.

use filiform::cli::bracket_table_latex;
use filiform::exactalg::parse_poly;
use filiform::variety::known_relations;
use filiform::vergne::generic_filiform;

#[test]
fn canonical_form_of_the_f9_relation() {
    let eq = &known_relations(9).unwrap().equations[0].1;
    assert_eq!(
        eq.to_string(),
        "2*a[1,4]*a[3,8] - 3*a[2,6]^2 + a[2,6]*a[3,8]"
    );
    assert_eq!(
        eq.latex(),
        "2a_{1,4}a_{3,8} - 3a_{2,6}^{2} + a_{2,6}a_{3,8}"
    );
}

#[test]
fn canonical_bracket_rows_dimension_9() {
    let model = generic_filiform(9);
    let rows: Vec<(u8, u8, u8, &str)> = vec![
        (1, 2, 4, "a[1,4]"),
        (1, 4, 6, "a[1,4] - a[2,6]"),
        (1, 5, 7, "a[1,4] - 2*a[2,6]"),
        (1, 6, 8, "a[1,4] - 3*a[2,6] + a[3,8]"),
        (2, 5, 8, "a[2,6] - a[3,8]"),
        (3, 4, 8, "a[3,8]"),
    ];
    for (i, j, k, expected) in rows {
        assert_eq!(model.mu.coeff(i, j, k), parse_poly(expected).unwrap());
        assert_eq!(model.mu.coeff(i, j, k).to_string(), expected);
    }
}

#[test]
fn bracket_table_latex_dimension_9() {
    let table = bracket_table_latex(9);
    let expected_lines = [
        "\\mu(x_{0}, x_{1}) &=& x_{2} \\\\",
        "\\mu(x_{1}, x_{2}) &=& a_{1,4}x_{4} + a_{1,5}x_{5} + a_{1,6}x_{6} + a_{1,7}x_{7} + a_{1,8}x_{8} \\\\",
        "\\mu(x_{1}, x_{4}) &=& ( a_{1,4} - a_{2,6} )x_{6} + ( a_{1,5} - a_{2,7} )x_{7} + ( a_{1,6} - a_{2,8} )x_{8} \\\\",
        "\\mu(x_{2}, x_{3}) &=& a_{2,6}x_{6} + a_{2,7}x_{7} + a_{2,8}x_{8} \\\\",
        "\\mu(x_{3}, x_{4}) &=& a_{3,8}x_{8} \\\\",
    ];
    for line in expected_lines {
        assert!(
            table.contains(line),
            "missing line: {line}\nin table:\n{table}"
        );
    }
}

#[test]
fn point_json_schema() {
    let point =
        filiform::vergne::FiliformPoint::parse(9, &["1", "-1", "0", "0", "0", "1", "1", "0", "1"])
            .unwrap();
    let json = serde_json::to_string(&point).unwrap();
    assert_eq!(
        json,
        r#"{"n":9,"values":["1","-1","0","0","0","1","1","0","1"]}"#
    );
    let back: filiform::vergne::FiliformPoint = serde_json::from_str(&json).unwrap();
    assert_eq!(back, point);
}

#[test]
fn bilinear_map_json_schema() {
    let json = serde_json::to_string(&filiform::vergne::mu0(4)).unwrap();
    assert_eq!(
        json,
        r#"{"dim":4,"entries":[{"i":0,"j":1,"k":2,"poly":"1"},{"i":0,"j":2,"k":3,"poly":"1"}]}"#
    );
}
