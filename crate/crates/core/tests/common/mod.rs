//! Seeded random word generators shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use singbraid::perm::coset_rep;
use singbraid::sp3::sg3_transversal;
use singbraid::word::sg3_relators;
use singbraid::{BraidWord, Generator, SpGen, SpWord};

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign(rng: &mut TestRng) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// Unit letters drawn uniformly from all `s_i^±1, t_i^±1`.
pub fn random_braid(rng: &mut TestRng, strands: usize, len: usize) -> BraidWord {
    let gens = Generator::all(strands);
    let mut w = BraidWord::identity(strands).unwrap();
    for _ in 0..len {
        let g = gens[rng.gen_range(0..gens.len())];
        let e = sign(rng);
        w.push(g, e).unwrap();
    }
    w
}

/// A 3-strand word with trivial permutation of total length at most `max_len`.
pub fn random_pure(rng: &mut TestRng, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len - 3);
    let w = random_braid(rng, 3, len);
    let rep = coset_rep(&w, sg3_transversal()).unwrap().clone();
    w.concat(&rep.invert()).unwrap()
}

/// A product of `count` conjugates `c r^±1 c^-1` of the defining relators.
pub fn random_relator_product(rng: &mut TestRng, count: usize, conj_len: usize) -> BraidWord {
    let relators = sg3_relators();
    let mut w = BraidWord::identity(3).unwrap();
    for _ in 0..count {
        let r = relators[rng.gen_range(0..relators.len())].pow(sign(rng));
        let len = rng.gen_range(0..=conj_len);
        let c = random_braid(rng, 3, len);
        w = w.concat(&r.conjugate_by(&c).unwrap()).unwrap();
    }
    w
}

pub fn random_sp(rng: &mut TestRng, len: usize) -> SpWord {
    let mut w = SpWord::new();
    for _ in 0..len {
        let g = SpGen::ALL[rng.gen_range(0..6)];
        let e = sign(rng);
        w.push(g, e);
    }
    w
}
