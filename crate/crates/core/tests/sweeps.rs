use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubert_sem::lpr::{compact_rep, proper_rep, sem_of_proper, LatticeRep};
use schubert_sem::perm::{avoids_all, avoids_thirteen, contains_pattern, find_pattern, patterns};
use schubert_sem::schubert::{schubert, schubert_via_pipedreams};
use schubert_sem::verify::{random_permutation, random_thirteen_avoiding};
use schubert_sem::{Integer, Permutation, Poly};

fn random_subpattern(rng: &mut ChaCha8Rng, w: &Permutation) -> Permutation {
    let size = rng.gen_range(1..=w.len());
    let mut idx = rand::seq::index::sample(rng, w.len(), size).into_vec();
    idx.sort();
    Permutation::standardize(&idx.iter().map(|&i| w.word()[i]).collect::<Vec<_>>())
}

#[test]
fn containment_is_transitive() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(3..=8);
        let w = random_permutation(&mut rng, n);
        let mid = random_subpattern(&mut rng, &w);
        let p = random_subpattern(&mut rng, &mid);
        assert!(contains_pattern(&w, &mid));
        assert!(contains_pattern(&mid, &p));
        assert!(find_pattern(&w, &p).is_some(), "{p} in {mid} in {w}");
        // and a random non-pattern stays out of every pattern of w
        let k = rng.gen_range(1..=4);
        let q = random_permutation(&mut rng, k);
        if !contains_pattern(&w, &q) {
            assert!(!contains_pattern(&mid, &q), "{q} in {mid} but not in {w}");
        }
    }
}

#[test]
fn pipe_dreams_for_sampled_s7() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let w = random_permutation(&mut rng, 7);
        let pd: Poly = schubert_via_pipedreams(&w).unwrap();
        assert_eq!(pd, schubert(&w), "{w}");
    }
}

#[test]
fn compact_reps_are_compact_parking_and_correct() {
    let sep = patterns(&["1324", "2413", "3142"]);
    for w in Permutation::all(6).filter(|w| avoids_all(w, &sep)) {
        let rep = compact_rep(&w).unwrap();
        assert!(rep.is_compact(), "{w}");
        assert!(rep.is_parking(), "{w}");
        assert_eq!(rep.determinant::<Integer>(), schubert(&w), "{w}");
    }
}

#[test]
fn proper_sem_coefficients_are_units() {
    for w in Permutation::all(6).filter(avoids_thirteen) {
        let sem = sem_of_proper::<Integer>(&proper_rep(&w).unwrap()).unwrap();
        assert!(sem.iter().all(|(_, c)| *c == Integer::from(1) || *c == Integer::from(-1)), "{w}");
    }
}

#[test]
fn reps_survive_json() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let w = random_thirteen_avoiding(&mut rng, 6);
        let rep = proper_rep(&w).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: LatticeRep = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.label(), Some(w.to_string().as_str()));
    }
}
