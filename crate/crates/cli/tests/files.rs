use terrain_guard::gen::{generate_random, Family, GenParams};
use terrain_guard::{Error, Side};
use terrain_guard_cli::instance_file::Rat;
use terrain_guard_cli::{parse_instance, serialize_instance, CliError, SolutionFile};

const MINIMAL: &str = r#"{"mode": "one_sided", "terrain": [["0", "0"], ["4", "2"]], "points": ["3"], "left_guards": ["1"]}"#;

#[test]
fn minimal_file_parses() {
    let inst = parse_instance(MINIMAL).unwrap();
    assert_eq!(inst.terrain.len(), 2);
    assert_eq!(inst.points.len(), 1);
    assert_eq!(inst.left_guards[0].weight, Rat::parse("1").unwrap());
    assert_eq!(inst.points[0].y(), &Rat::parse("3/2").unwrap());
}

#[test]
fn round_trip_on_generated_instances() {
    let families = [Family::LeftGuarding, Family::OneSided, Family::Discrete { shared: 2 }, Family::Continuous];
    for seed in 0..200 {
        let inst = generate_random(&GenParams::new(seed, 2 + (seed % 10) as usize, 8, 6, families[(seed % 4) as usize]));
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap();
        assert_eq!(back, inst, "seed {seed}");
        assert_eq!(serialize_instance(&back), text);
    }
}

#[test]
fn rational_syntax() {
    assert_eq!(Rat::parse("-7/3").unwrap().to_string(), "-7/3");
    assert_eq!(Rat::parse("4/2").unwrap().to_string(), "2");
    for bad in ["1/0", "1/-2", "1.5", "", "x", "1/", "/2", "--1"] {
        assert!(Rat::parse(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn zero_denominator_weight_is_a_parse_error() {
    let text = "{\n  \"mode\": \"one_sided\",\n  \"terrain\": [[\"0\", \"0\"], [\"4\", \"2\"]],\n  \"points\": [\"3\"],\n  \"left_guards\": [\"1\"],\n  \"weights\": {\"left\": [\"1/0\"]}\n}";
    match parse_instance(text).unwrap_err() {
        CliError::Parse { line, message, .. } => {
            assert_eq!(line, 6);
            assert!(message.contains("1/0"), "{message}");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn integers_accepted_floats_rejected() {
    let ints = r#"{"mode": "one_sided", "terrain": [[0, 0], [4, 2]], "points": [3], "left_guards": [1]}"#;
    assert_eq!(parse_instance(ints).unwrap(), parse_instance(MINIMAL).unwrap());
    let floats = r#"{"mode": "one_sided", "terrain": [[0, 0], [4, 2.5]], "points": [3], "left_guards": [1]}"#;
    assert!(matches!(parse_instance(floats), Err(CliError::Parse { line: 1, .. })));
}

#[test]
fn validation_errors_name_the_value() {
    let out_of_range = MINIMAL.replace(r#""points": ["3"]"#, r#""points": ["9/2"]"#);
    let err = parse_instance(&out_of_range).unwrap_err();
    assert!(matches!(&err, CliError::Invalid { field, .. } if field == "points[0]"), "{err:?}");
    assert!(err.to_string().contains("9/2"), "{err}");
    assert_eq!(err.exit_code(), 2);

    let unknown_field = MINIMAL.replace("\"points\"", "\"pionts\"");
    assert!(matches!(parse_instance(&unknown_field), Err(CliError::Parse { .. })));

    let bad_mode = MINIMAL.replace("one_sided", "sideways");
    assert!(matches!(parse_instance(&bad_mode), Err(CliError::Invalid { field, .. }) if field == "mode"));

    let weights = MINIMAL.replace(r#""left_guards": ["1"]"#, r#""left_guards": ["1"], "weights": {"left": ["1", "2"]}"#);
    assert!(matches!(parse_instance(&weights), Err(CliError::Invalid { field, .. }) if field == "weights.left"));

    let not_monotone = MINIMAL.replace(r#"["4", "2"]"#, r#"["0", "2"]"#);
    assert!(matches!(parse_instance(&not_monotone), Err(CliError::Core(Error::NotMonotone { .. }))));

    let zero_weight = MINIMAL.replace(r#""left_guards": ["1"]"#, r#""left_guards": ["1"], "weights": {"left": ["0"]}"#);
    assert!(matches!(parse_instance(&zero_weight), Err(CliError::Core(Error::NonPositiveWeight { .. }))));
}

#[test]
fn duplicate_guards_are_dropped() {
    let dup = MINIMAL.replace(r#""left_guards": ["1"]"#, r#""left_guards": ["1", "2/2", "2"]"#);
    let inst = parse_instance(&dup).unwrap();
    assert_eq!(inst.left_guards.len(), 2);
}

#[test]
fn solution_files_resolve_weights() {
    let text = MINIMAL.replace(r#""left_guards": ["1"]"#, r#""left_guards": ["1"], "weights": {"left": ["5/2"]}"#);
    let inst = parse_instance(&text).unwrap();
    let sol = SolutionFile::from_json(r#"{"picks": [{"x": "1", "side": "left"}]}"#).unwrap().to_solution(&inst).unwrap();
    assert_eq!(sol.cost, Rat::parse("5/2").unwrap());
    assert_eq!(sol.picks[0].side, Side::Left);
    let back = SolutionFile::from_json(&SolutionFile::from_solution(&sol).to_json()).unwrap();
    assert_eq!(back.to_solution(&inst).unwrap(), sol);

    let wrong_side = SolutionFile::from_json(r#"{"picks": [{"x": "1", "side": "right"}]}"#).unwrap();
    assert!(matches!(wrong_side.to_solution(&inst), Err(CliError::Invalid { .. })));
}
