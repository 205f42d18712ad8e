use clap::CommandFactory;

use super::*;

#[test]
fn argument_definitions_are_consistent() {
    Args::command().debug_assert();
}

#[test]
fn input_kind_follows_header() {
    let cases = [
        ("theory t { op f:2; }", "theory"),
        ("algebra a { carrier 1; op f/0 = [0]; }", "algebra"),
        ("monoid m { carrier 1; unit 0; table = [0]; }", "monoid"),
        ("category c { object o; }", "category"),
        ("# leading comment\ntheory t { }", "theory"),
    ];
    for (text, kind) in cases {
        assert_eq!(parse_input(text).unwrap().kind(), kind, "{text}");
    }
    let unknown = parse_input("\n  widget w { }").unwrap_err();
    assert_eq!((unknown.line, unknown.column), (2, 3));
    let empty = parse_input("# nothing\n").unwrap_err();
    assert_eq!((empty.line, empty.column), (1, 1));
}

#[test]
fn pair_inputs_are_both_loaded() {
    let args = Args::try_parse_from(["catcom", "tensor", "a.thy", "b.thy", "--left", "x"]).unwrap();
    let inputs: Vec<String> = args.command.inputs().iter().map(|p| p.display().to_string()).collect();
    assert_eq!(inputs, ["a.thy", "b.thy"]);
    assert_eq!(args.options.left.as_deref(), Some("x"));
}
