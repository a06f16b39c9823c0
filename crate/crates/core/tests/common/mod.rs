//! Reference recurrences written independently of the library: plain
//! `u128` arithmetic reduced mod 2^w, modular indexing, no shared constants.
#![allow(dead_code)]

const M64: u128 = (1 << 64) - 1;
const M32: u128 = (1 << 32) - 1;

fn shl(x: u128, k: u32, mask: u128) -> u128 {
    (x << k) & mask
}

pub fn splitmix64(seed: u64, n: usize) -> Vec<u64> {
    let mut s = seed as u128;
    (0..n)
        .map(|_| {
            s = (s + 0x9E37_79B9_7F4A_7C15) & M64;
            let mut z = s;
            z = ((z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9) & M64;
            z = ((z ^ (z >> 27)) * 0x94D0_49BB_1331_11EB) & M64;
            (z ^ (z >> 31)) as u64
        })
        .collect()
}

pub fn xorshift_triple(seed: u64, a: u32, b: u32, c: u32, mask: u128, n: usize) -> Vec<u64> {
    let mut x = seed as u128 & mask;
    (0..n)
        .map(|_| {
            x ^= shl(x, a, mask);
            x ^= x >> b;
            x ^= shl(x, c, mask);
            x as u64
        })
        .collect()
}

pub fn xorshift32(seed: u64, n: usize) -> Vec<u64> {
    xorshift_triple(seed, 13, 17, 5, M32, n)
}

pub fn xorshift64(seed: u64, n: usize) -> Vec<u64> {
    xorshift_triple(seed, 13, 7, 17, M64, n)
}

pub fn xorshift128(lanes: [u32; 4], n: usize) -> Vec<u64> {
    let mut q: Vec<u128> = lanes.iter().map(|&l| l as u128).collect();
    (0..n)
        .map(|_| {
            let t = q[0] ^ shl(q[0], 11, M32);
            let w = q[3];
            let next = w ^ (w >> 19) ^ t ^ (t >> 8);
            q.remove(0);
            q.push(next);
            next as u64
        })
        .collect()
}

pub fn xorshift128plus(seed: [u64; 2], n: usize) -> Vec<u64> {
    let (mut a, mut b) = (seed[0] as u128, seed[1] as u128);
    (0..n)
        .map(|_| {
            let mut s1 = a;
            let s0 = b;
            s1 ^= shl(s1, 23, M64);
            let nb = s1 ^ s0 ^ (s1 >> 17) ^ (s0 >> 26);
            a = s0;
            b = nb;
            ((nb + s0) & M64) as u64
        })
        .collect()
}

pub fn pcg32(initstate: u64, initseq: u64, n: usize) -> Vec<u64> {
    let mul: u128 = 6_364_136_223_846_793_005;
    let inc = ((initseq as u128) << 1 | 1) & M64;
    let step = |s: u128| (s * mul + inc) & M64;
    let mut state = step(0);
    state = step((state + initstate as u128) & M64);
    (0..n)
        .map(|_| {
            let old = state;
            state = step(state);
            let xs = (((old >> 18) ^ old) >> 27) & M32;
            let rot = (old >> 59) as u32;
            let out = ((xs >> rot) | (xs << ((32 - rot) % 32))) & M32;
            out as u64
        })
        .collect()
}

pub fn kiss(seed: [u32; 4], n: usize) -> Vec<u64> {
    let [mut z, mut w, mut jsr, mut jc] = seed.map(|s| s as u128);
    (0..n)
        .map(|_| {
            z = (36969 * (z & 65535) + (z >> 16)) & M32;
            w = (18000 * (w & 65535) + (w >> 16)) & M32;
            let mwc = (shl(z, 16, M32) + w) & M32;
            jc = (69069 * jc + 12345) & M32;
            jsr ^= shl(jsr, 13, M32);
            jsr ^= jsr >> 17;
            jsr ^= shl(jsr, 5, M32);
            (((mwc ^ jc) + jsr) & M32) as u64
        })
        .collect()
}

pub fn mt19937_64(seed: u64, n: usize) -> Vec<u64> {
    const N: usize = 312;
    let mut mt = vec![0u128; N];
    mt[0] = seed as u128;
    for i in 1..N {
        mt[i] = (6_364_136_223_846_793_005 * (mt[i - 1] ^ (mt[i - 1] >> 62)) + i as u128) & M64;
    }
    let mut idx = N;
    (0..n)
        .map(|_| {
            if idx == N {
                for i in 0..N {
                    let x = (mt[i] & 0xFFFF_FFFF_8000_0000) | (mt[(i + 1) % N] & 0x7FFF_FFFF);
                    let mag = if x % 2 == 1 { 0xB502_6F5A_A966_19E9 } else { 0 };
                    mt[i] = mt[(i + 156) % N] ^ (x >> 1) ^ mag;
                }
                idx = 0;
            }
            let mut y = mt[idx];
            idx += 1;
            y ^= (y >> 29) & 0x5555_5555_5555_5555;
            y ^= shl(y, 17, M64) & 0x71D6_7FFF_EDA6_0000;
            y ^= shl(y, 37, M64) & 0xFFF7_EEE0_0000_0000;
            y ^= y >> 43;
            y as u64
        })
        .collect()
}
