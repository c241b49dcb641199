use proptest::prelude::*;
use toricmdp::linalg::IntVector;
use toricmdp_cli::fanfile::{parse_fan_file, FanFile};

fn arb_fan_file() -> impl Strategy<Value = FanFile> {
    (1usize..=4, 1usize..=6).prop_flat_map(|(dim, rays)| {
        (
            proptest::option::of("[A-Za-z][A-Za-z0-9 ]{0,12}[A-Za-z0-9]"),
            proptest::collection::vec(proptest::collection::vec(-1000i64..=1000, dim), rays),
            proptest::collection::vec(proptest::collection::vec(0..rays, dim), 0..5),
        )
            .prop_map(move |(name, rays, cones)| FanFile {
                name,
                dim,
                rays: rays.iter().map(|r| IntVector::from_i64s(r)).collect(),
                cones,
            })
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(file in arb_fan_file()) {
        prop_assert_eq!(parse_fan_file(&file.render()).unwrap(), file);
    }

    #[test]
    fn bad_integers_are_located(line in 1usize..4, junk in "[a-z]{1,3}") {
        let mut lines = ["dim 2".to_string(), "ray 1 0".into(), "ray 0 1".into(), "ray -1 -1".into()];
        lines[line] = format!("ray 1 {junk}");
        let err = parse_fan_file(&lines.join("\n")).unwrap_err();
        prop_assert_eq!((err.line, err.column), (line + 1, 7));
    }
}
