use std::fmt;

/// A basis blade of Cl(1,3), encoded as a 4-bit mask: bit `mu` is set when
/// `gamma_mu` is a factor. Factors are always taken in ascending index order,
/// so mask `0b0011` is `g01 = g0 g1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BladeIndex(u8);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);
    pub const PSEUDOSCALAR: BladeIndex = BladeIndex(0b1111);

    /// Panics if `mask > 15`.
    pub const fn new(mask: u8) -> Self {
        assert!(mask < 16, "blade mask out of range");
        BladeIndex(mask)
    }

    pub const fn mask(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, mu: u8) -> bool {
        self.0 >> mu & 1 == 1
    }

    /// All sixteen blades ordered by grade, then lexicographically by indices.
    pub fn canonical_order() -> [BladeIndex; 16] {
        let mut all: [BladeIndex; 16] = std::array::from_fn(|m| BladeIndex(m as u8));
        all.sort_by_key(|b| (b.grade(), b.indices_key()));
        all
    }

    fn indices_key(self) -> u32 {
        (0..4u8)
            .filter(|&mu| self.contains(mu))
            .fold(0, |acc, mu| acc * 10 + u32::from(mu) + 1)
    }

    /// Name in the `g0..g3` spacetime basis: `1`, `g0`, `g12`, `g0123`.
    pub fn name(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let digits: String = (0..4u8)
            .filter(|&mu| self.contains(mu))
            .map(|mu| char::from(b'0' + mu))
            .collect();
        format!("g{digits}")
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Product of two basis blades: returns the sign and the resulting blade.
///
/// The sign counts the transpositions needed to sort the concatenated factor
/// list, then contracts repeated generators with the (+,-,-,-) metric.
pub fn blade_product(a: BladeIndex, b: BladeIndex) -> (f64, BladeIndex) {
    let (a, b) = (a.0, b.0);
    let mut swaps = 0u32;
    for j in 0..4 {
        if b >> j & 1 == 1 {
            swaps += (a >> (j + 1)).count_ones();
        }
    }
    // gamma_k^2 = -1 for k = 1, 2, 3
    swaps += (a & b & 0b1110).count_ones();
    let sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
    (sign, BladeIndex(a ^ b))
}

/// Precomputed multiplication table: `TABLE[a][b] = (sign, a ^ b)`.
pub(crate) fn product_table() -> &'static [[(f64, u8); 16]; 16] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[[(f64, u8); 16]; 16]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0.0, 0u8); 16]; 16];
        for (a, row) in t.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                let (s, r) = blade_product(BladeIndex(a as u8), BladeIndex(b as u8));
                *cell = (s, r.0);
            }
        }
        t
    })
}
