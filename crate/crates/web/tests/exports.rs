use matchstick_web::{disk_lattice_json, extend_path_json, triangle_free_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn triangle_free_counts() {
    let v = parse(triangle_free_json(20).unwrap());
    assert_eq!(
        (v["n"].as_u64(), v["e"].as_u64(), v["target"].as_u64()),
        (Some(20), Some(32), Some(32))
    );
    let svg = v["svg"].as_str().unwrap();
    assert_eq!(svg.matches("stroke-dasharray").count(), 7);
    assert!(triangle_free_json(100_000).is_err());
}

#[test]
fn disk_lattice_density() {
    let v = parse(disk_lattice_json(3.0, 40).unwrap());
    assert_eq!(v["e"].as_u64(), Some(56));
    let v = parse(disk_lattice_json(4.0, 2000).unwrap());
    assert!(v["ratio"].as_f64().unwrap() >= v["coefficient"].as_f64().unwrap());
    assert_eq!(v["svg"].as_str().unwrap().matches("marker-end").count(), 2);
    assert!(disk_lattice_json(1.5, 10).is_err());
}

#[test]
fn extend_path_finds_irregular_edge() {
    let a = extend_path_json(3.0, 400, 1).unwrap();
    assert_eq!(a, extend_path_json(3.0, 400, 1).unwrap());
    let v = parse(a);
    assert_eq!(v["found_irregular"], true);
    assert!(v["regular_edges"].as_u64().unwrap() > 0);
    assert!(v["steps"].as_u64() <= v["step_bound"].as_u64());
}
