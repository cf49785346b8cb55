//! Counter-based seeded sampling: the i-th draw is a pure function of
//! (seed, i), so any sample index is reproducible independently of the
//! others and stripes of a campaign can draw their own indices.

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// The i-th 64-bit output for this seed.
pub fn draw(seed: u64, index: u64) -> u64 {
    mix(seed ^ mix(index))
}

/// The i-th draw mapped into [0, bound) by 128-bit multiply-shift; the bias
/// is ~bound/2^64, immaterial at desk scale.
pub fn draw_below(seed: u64, index: u64, bound: u64) -> u64 {
    assert!(bound > 0);
    ((draw(seed, index) as u128 * bound as u128) >> 64) as u64
}
