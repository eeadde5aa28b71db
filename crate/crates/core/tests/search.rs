mod common;

use circulant_codes::catalog;
use circulant_codes::{
    find_bad_codewords, improve, is_graph_vector, min_distance, score_element, CirculantCode,
    GeneratorVector, Outcome,
};
use rand::{rngs::StdRng, SeedableRng};

/// c-values recomputed from the dense matrix with 0-based column arithmetic.
fn dense_scores(a: &[u8], p: usize, rows: &[usize]) -> Vec<u8> {
    let n = a.len();
    let m = common::dense_matrix(a);
    rows.iter()
        .map(|&ji| {
            let col = (ji - 1 + p - 1) % n;
            (rows.iter().map(|&jl| m[jl - 1][col] as u32).sum::<u32>() % 2) as u8
        })
        .collect()
}

fn unpack(alpha: &GeneratorVector) -> Vec<u8> {
    alpha.bits().iter().map(u8::from).collect()
}

#[test]
fn alpha15_scores_match_dense_recomputation() {
    let alpha = catalog::alpha15();
    let a = unpack(&alpha);
    let certs = find_bad_codewords(&alpha, 8).unwrap();
    assert!(!certs.is_empty());
    let p = alpha.ones()[0];
    let score = score_element(&alpha, p, &certs).unwrap();
    assert_eq!(score.position, p);
    for (cert, cs) in certs.iter().zip(&score.c_values) {
        assert_eq!(cs, &dense_scores(&a, p, &cert.rows));
        // c_i is the check-half bit of the certificate at column j_i + p - 1
        let check = cert.codeword.check_part();
        for (&j, &c) in cert.rows.iter().zip(cs) {
            assert_eq!(check.get((j - 1 + p - 1) % a.len()) as u8, c);
        }
    }
    let ones: usize = score.c_values.iter().flatten().map(|&c| c as usize).sum();
    assert_eq!(score.ones, ones);
    assert_eq!(score.is_bad, score.zeros > score.ones);
}

#[test]
fn certificates_are_valid_for_random_vectors() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..60 {
        let n = 5 + (rand::Rng::gen_range(&mut rng, 0..10));
        let a = common::random_alpha(&mut rng, n);
        let alpha: GeneratorVector = common::to_bits_string(&a).parse().unwrap();
        let d = common::brute_min_distance(&a);
        let target = d + 3;
        let certs = find_bad_codewords(&alpha, target).unwrap();
        assert_eq!(certs[0].weight, d);
        let mut last = 0;
        let code = CirculantCode::new(alpha.clone());
        for c in &certs {
            assert!(c.weight < target && c.weight > last);
            last = c.weight;
            let rebuilt = code.combine_rows(&c.rows).unwrap();
            assert_eq!(rebuilt, c.codeword);
            assert_eq!(rebuilt.weight(), c.weight);
            let mut m = vec![0u8; n];
            for &j in &c.rows {
                m[j - 1] = 1;
            }
            let dense = common::dense_encode(&a, &m);
            assert_eq!(dense.iter().map(|&b| b as usize).sum::<usize>(), c.weight);
        }
        // every weight in d..target with a codeword has a certificate
        let dist = common::brute_distribution(&a);
        let present: Vec<usize> = (d..target).filter(|&w| dist[w] > 0).collect();
        let got: Vec<usize> = certs.iter().map(|c| c.weight).collect();
        assert_eq!(got, present);
        // circulant identity: a[j, j + p - 1] = b_p for every row
        let dense = common::dense_matrix(&a);
        for p in alpha.ones() {
            for c in &certs {
                for &j in &c.rows {
                    assert_eq!(dense[j - 1][(j - 1 + p - 1) % n], a[p - 1]);
                }
            }
            score_element(&alpha, p, &certs).unwrap();
        }
    }
}

#[test]
fn improve_trace_invariants() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..40 {
        let n = 6 + rand::Rng::gen_range(&mut rng, 0..9);
        let a = common::random_alpha(&mut rng, n);
        let alpha: GeneratorVector = common::to_bits_string(&a).parse().unwrap();
        let target = min_distance(&alpha, None).unwrap().d + 2;
        let trace = improve(&alpha, target, 50).unwrap();
        assert!(trace.steps.len() <= alpha.weight() + 1);
        let mut prev: Option<&GeneratorVector> = None;
        for s in &trace.steps {
            assert_eq!(s.d, min_distance(&s.alpha, None).unwrap().d);
            assert!(s.d < target);
            if let Some(pr) = prev {
                assert_eq!(s.alpha.weight() + 1, pr.weight());
                let diff: Vec<usize> = (1..=n).filter(|&p| s.alpha.b(p) != pr.b(p)).collect();
                assert_eq!(diff.len(), 1);
                assert!(pr.b(diff[0]) && diff[0] != 1);
            }
            prev = Some(&s.alpha);
        }
        assert_eq!(
            trace.final_d,
            min_distance(&trace.final_alpha, None).unwrap().d
        );
        match trace.outcome {
            Outcome::Reached => assert!(trace.final_d >= target),
            Outcome::Stalled => assert_eq!(trace.steps.last().unwrap().flipped, None),
            Outcome::IterationCap => unreachable!("cap of 50 exceeds the weight"),
        }
    }
}

#[test]
fn iteration_cap_is_reported() {
    // alpha25^2 needs three flips before it stalls
    let t = improve(&catalog::alpha25_b(), 10, 2).unwrap();
    assert_eq!(t.outcome, Outcome::IterationCap);
    assert_eq!(t.steps.len(), 2);
    assert!(t.final_d < 10);
}

#[test]
fn flips_leave_graph_class() {
    let t = improve(&catalog::alpha19(), 8, 10).unwrap();
    assert!(is_graph_vector(&t.steps[0].alpha));
    assert!(!is_graph_vector(&t.final_alpha));
}
