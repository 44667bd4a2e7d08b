use colbwt::order::is_primitive;
use colbwt::{Sequence, StringCollection};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const LETTERS: &[u8] = b"ACGT";

pub fn rand_string(rng: &mut ChaCha8Rng, max_len: usize, sigma: usize) -> Vec<u8> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| LETTERS[rng.gen_range(0..sigma)]).collect()
}

pub fn rand_collection(
    rng: &mut ChaCha8Rng,
    min_m: usize,
    max_m: usize,
    max_len: usize,
    sigma: usize,
) -> StringCollection {
    let m = rng.gen_range(min_m..=max_m);
    let items = (0..m)
        .map(|_| Sequence::new(rand_string(rng, max_len, sigma)).unwrap())
        .collect();
    StringCollection::new(items).unwrap()
}

/// Like `rand_collection` but every string is primitive (required by the
/// strict extended transform).
pub fn rand_primitive_collection(
    rng: &mut ChaCha8Rng,
    min_m: usize,
    max_m: usize,
    max_len: usize,
    sigma: usize,
) -> StringCollection {
    let m = rng.gen_range(min_m..=max_m);
    let items = (0..m)
        .map(|_| {
            loop {
                let s = rand_string(rng, max_len, sigma);
                if is_primitive(&s) {
                    return Sequence::new(s).unwrap();
                }
            }
        })
        .collect();
    StringCollection::new(items).unwrap()
}

pub fn sorted_items(c: &StringCollection) -> Vec<Vec<u8>> {
    let mut v: Vec<Vec<u8>> = c.items().iter().map(|s| s.as_bytes().to_vec()).collect();
    v.sort();
    v
}

pub fn items(c: &StringCollection) -> Vec<Vec<u8>> {
    c.items().iter().map(|s| s.as_bytes().to_vec()).collect()
}
