//! Set partitions as restricted-growth strings.
//!
//! A string `a` with `a[0] = 0` and `a[i] <= 1 + max(a[..i])` names the
//! partition whose blocks are the positions sharing a value. Enumerating
//! these lists every coloring exactly once up to renaming colors.

/// Visits every restricted-growth string of length `n` with at most
/// `max_blocks` blocks. `prefix_ok` is called after each extension with the
/// prefix so far; returning `false` prunes the subtree. `visit` returns
/// `false` to stop the enumeration early. Returns whether it ran to completion.
pub fn for_each_partition<P, V>(n: usize, max_blocks: usize, mut prefix_ok: P, mut visit: V) -> bool
where
    P: FnMut(&[u32]) -> bool,
    V: FnMut(&[u32]) -> bool,
{
    if n == 0 {
        return visit(&[]);
    }
    if max_blocks == 0 {
        return true;
    }
    let mut a = Vec::with_capacity(n);
    fn rec<P, V>(a: &mut Vec<u32>, used: u32, n: usize, max_blocks: usize, prefix_ok: &mut P, visit: &mut V) -> bool
    where
        P: FnMut(&[u32]) -> bool,
        V: FnMut(&[u32]) -> bool,
    {
        if a.len() == n {
            return visit(a);
        }
        let top = used.min(max_blocks as u32 - 1);
        for c in 0..=top {
            a.push(c);
            let keep_going = if prefix_ok(a) {
                rec(a, used.max(c + 1), n, max_blocks, prefix_ok, visit)
            } else {
                true
            };
            a.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    rec(&mut a, 0, n, max_blocks, &mut prefix_ok, &mut visit)
}

/// All restricted-growth strings of length `n` (Bell(n) of them).
pub fn all_partitions(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_partition(n, n.max(1), |_| true, |a| {
        out.push(a.to_vec());
        true
    });
    out
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}
