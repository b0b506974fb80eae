//! File-format level checks that cross module boundaries: the quotient
//! output schema and the identity-file round trip through the successor
//! generators.

use splitalg::doubling::bar_quotient;
use splitalg::fdalg::fixtures::dual_numbers;
use splitalg::fdalg::{read_algebra, triassociative_tensor_cube, write_bar_quotient};
use splitalg::successor::{generate_dendriform_identities, Mode};
use splitalg::terms::Context;
use splitalg::varieties::{parse_identity_file, VarietyPresentation};

#[test]
fn bar_quotient_file_carries_quotient_data() {
    let cube = triassociative_tensor_cube(&dual_numbers()).unwrap();
    let bq = bar_quotient(&cube, Mode::Tri).unwrap();

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.bar.json");
    write_bar_quotient(&path, &bq, None).unwrap();

    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["bar_dim"], serde_json::json!(bq.bar_dim));
    let projection = value["projection"].as_array().unwrap();
    assert_eq!(projection.len(), bq.bar_dim);
    assert_eq!(projection[0].as_array().unwrap().len(), cube.dim());
    assert_eq!(value["context"], serde_json::json!("omega"));

    // The hat algebra itself reads back as a plain algebra file.
    let hat = read_algebra(&path).unwrap();
    assert_eq!(hat, bq.hat);
}

#[test]
fn generated_identity_files_round_trip_per_mode() {
    let v = VarietyPresentation::builtin("poisson").unwrap();
    for mode in [Mode::Di, Mode::Tri, Mode::STri] {
        for dendriform in [false, true] {
            let set = if dendriform {
                generate_dendriform_identities(&v, mode).unwrap()
            } else {
                splitalg::successor::generate_variety_identities(&v, mode).unwrap()
            };
            let text = set.to_text();
            let (sig, parsed) = parse_identity_file(&text, Context::Omega).unwrap();
            assert_eq!(sig, set.signature);
            let expected = set.labeled();
            assert_eq!(parsed.len(), expected.len());
            for ((la, pa), (lb, pb)) in parsed.iter().zip(&expected) {
                assert_eq!(la, lb);
                assert_eq!(pa, pb);
            }
        }
    }
}
