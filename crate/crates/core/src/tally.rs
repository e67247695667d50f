/// Color multiset of a vertex set with O(1) updates. `ones` has bit `c` set
/// iff color `c` occurs exactly once, so the set has a center iff `ones != 0`.
#[derive(Clone, Copy)]
pub(crate) struct Tally {
    counts: [u8; 64],
    pub(crate) ones: u64,
}

impl Default for Tally {
    fn default() -> Self {
        Tally { counts: [0; 64], ones: 0 }
    }
}

impl Tally {
    #[inline]
    pub(crate) fn add(&mut self, color: usize) {
        self.counts[color] += 1;
        match self.counts[color] {
            1 => self.ones |= 1u64 << color,
            2 => self.ones &= !(1u64 << color),
            _ => {}
        }
    }

    #[inline]
    pub(crate) fn remove(&mut self, color: usize) {
        self.counts[color] -= 1;
        match self.counts[color] {
            0 => self.ones &= !(1u64 << color),
            1 => self.ones |= 1u64 << color,
            _ => {}
        }
    }
}
