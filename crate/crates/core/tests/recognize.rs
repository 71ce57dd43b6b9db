mod common;

use common::standard_library;
use knotcolor::coloring::{decode_model, encode_cnf, sat_decide, Coloring, SatResult};
use knotcolor::fixtures::{fixture, fixtures};
use knotcolor::recognize::{certify_knotted_parallel, CertificateViolation, CONVENTION_VERSION};
use knotcolor::{
    affine_prefilter, certify_knotted, colorable, count_colorings, dihedral, distinguish,
    verify_certificate, Budget, CertifyOutcome, DistinctionWitness, DistinguishOptions,
    DistinguishOutcome, KnottednessCertificate, Library,
};

#[test]
fn every_knotted_fixture_is_certified_by_the_standard_library() {
    let library = standard_library();
    for f in fixtures().iter().filter(|f| !f.is_unknot()) {
        let out = certify_knotted(&f.diagram, &library, &Budget::default()).unwrap();
        let cert = out
            .certificate()
            .unwrap_or_else(|| panic!("{} not certified", f.name));
        assert_eq!(verify_certificate(cert), Ok(()));
        // least index: nothing earlier colors the knot
        for q in library.iter().take(cert.library_index) {
            assert!(
                !colorable(&f.diagram, q),
                "{}: {} comes first",
                f.name,
                q.label()
            );
        }
        assert_eq!(
            out,
            certify_knotted_parallel(&f.diagram, &library, &Budget::default()).unwrap()
        );
    }
}

#[test]
fn unknots_are_never_certified() {
    let library = standard_library();
    for f in fixtures().iter().filter(|f| f.is_unknot()) {
        match certify_knotted(&f.diagram, &library, &Budget::default()).unwrap() {
            CertifyOutcome::Exhausted(report) => {
                assert_eq!(report.outcomes.len(), library.len());
                assert_eq!(report.budget_hits(), 0);
            }
            CertifyOutcome::Certified(_) => panic!("{} certified", f.name),
        }
    }
}

#[test]
fn sat_models_make_valid_certificates() {
    let library = standard_library().filtered(|q| q.size() <= 8);
    for f in fixtures() {
        for (i, q) in library.iter().enumerate() {
            let Ok(inst) = encode_cnf(&f.diagram, q, false, true) else {
                continue;
            };
            if let SatResult::Sat(model) = sat_decide(&inst) {
                let cert = KnottednessCertificate {
                    convention: CONVENTION_VERSION.into(),
                    knot: f.diagram.clone(),
                    quandle: q.record(),
                    library_index: i,
                    coloring: decode_model(&model, f.diagram.arc_count(), q.size()),
                };
                assert_eq!(
                    verify_certificate(&cert),
                    Ok(()),
                    "{} / {}",
                    f.name,
                    q.label()
                );
            }
        }
    }
}

#[test]
fn certificate_json_is_self_contained() {
    let k = fixture("figure-eight-dt").unwrap().diagram;
    let library = Library::from_quandles([dihedral(3).unwrap(), dihedral(5).unwrap()]);
    let out = certify_knotted(&k, &library, &Budget::default()).unwrap();
    let json = out.certificate().unwrap().to_json();
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["convention"], CONVENTION_VERSION);
    assert_eq!(value["quandle"]["name"], "dihedral(5)");
    assert_eq!(value["quandle"]["table"][0][1], 5);
    let mut back = KnottednessCertificate::from_json(&json).unwrap();
    assert_eq!(verify_certificate(&back), Ok(()));
    back.quandle.table[0][0] = 2;
    assert!(matches!(
        verify_certificate(&back),
        Err(CertificateViolation::NotAQuandle(_))
    ));
}

#[test]
fn one_wrong_arc_is_located() {
    let k = fixture("trefoil-braid").unwrap().diagram;
    let library = Library::from_quandles([dihedral(3).unwrap()]);
    let mut cert = certify_knotted(&k, &library, &Budget::default())
        .unwrap()
        .certificate()
        .unwrap()
        .clone();
    for arc in 0..k.arc_count() {
        let mut colors = cert.coloring.colors().to_vec();
        colors[arc] = colors[arc] % 3 + 1;
        let original = std::mem::replace(&mut cert.coloring, Coloring::new(colors));
        let Err(CertificateViolation::Crossing { crossing, .. }) = verify_certificate(&cert) else {
            panic!("perturbing arc {} went unnoticed", arc + 1);
        };
        let x = k.crossings()[crossing - 1];
        assert!([x.over, x.under_in, x.under_out].contains(&(arc + 1)));
        cert.coloring = original;
    }
}

#[test]
fn prefilter_removes_only_useless_quandles() {
    let library = standard_library();
    for f in fixtures() {
        let filtered = affine_prefilter(&f.diagram, &library);
        if filtered.len() < library.len() {
            for q in library.iter().filter(|q| q.is_affine()) {
                assert!(!colorable(&f.diagram, q), "{} / {}", f.name, q.label());
            }
        }
        let before = certify_knotted(&f.diagram, &library, &Budget::default()).unwrap();
        let after = if filtered.is_empty() {
            None
        } else {
            Some(certify_knotted(&f.diagram, &filtered, &Budget::default()).unwrap())
        };
        assert_eq!(
            before.is_certified(),
            after.is_some_and(|a| a.is_certified()),
            "{}",
            f.name
        );
    }
}

#[test]
fn witnesses_reproduce() {
    let library = standard_library().filtered(|q| q.size() <= 6);
    let opts = DistinguishOptions {
        alexander: false,
        ..DistinguishOptions::default()
    };
    let all = fixtures();
    for f in all.iter().filter(|f| f.diagram.crossing_count() <= 6) {
        for g in all.iter().filter(|g| g.diagram.crossing_count() <= 6) {
            match distinguish(&f.diagram, &g.diagram, &library, &opts) {
                DistinguishOutcome::Distinguished(DistinctionWitness::ColorCountMismatch {
                    index,
                    first,
                    second,
                    ..
                }) => {
                    let q = library.get(index).unwrap();
                    assert_ne!(first, second);
                    assert_eq!(count_colorings(&f.diagram, q), first);
                    assert_eq!(count_colorings(&g.diagram, q), second);
                    assert_ne!(f.knot_type, g.knot_type);
                }
                DistinguishOutcome::Distinguished(w) => panic!("unexpected witness {w:?}"),
                DistinguishOutcome::Indistinguishable(_) => {}
            }
        }
    }
}

#[test]
fn alexander_fast_path() {
    let trefoil = fixture("trefoil-gauss").unwrap().diagram;
    let fig8 = fixture("figure-eight-braid").unwrap().diagram;
    let library = Library::from_quandles([dihedral(3).unwrap()]);
    let out = distinguish(&trefoil, &fig8, &library, &DistinguishOptions::default());
    let Some(DistinctionWitness::AlexanderMismatch { first, second }) = out.witness() else {
        panic!("expected an Alexander mismatch");
    };
    assert_eq!(first.to_string(), "1 - t + t^2");
    assert_eq!(second.to_string(), "1 - 3*t + t^2");
}

#[test]
fn figure_eight_from_braid_word() {
    use knotcolor::quandle::{library_generate, GenerationSpec};
    use knotcolor::{braid_to_diagram, parse_braid};

    let fig8 = braid_to_diagram(&parse_braid("3: 1 -2 1 -2").unwrap()).unwrap();
    assert_eq!(count_colorings(&fig8, &dihedral(5).unwrap()), 20);

    let library = library_generate(&GenerationSpec::dihedral_primes(7));
    let outcome = certify_knotted(&fig8, &library, &Budget::default()).unwrap();
    let cert = outcome.certificate().expect("figure-eight is 5-colorable");
    assert_eq!(verify_certificate(cert), Ok(()));
    assert!(KnottednessCertificate::from_json(&cert.to_json()).is_ok());
}
