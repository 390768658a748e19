//! Prints census counts per (i, n).

use std::time::Instant;

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    for i in 4..=8 {
        let t = Instant::now();
        let counts: Vec<String> = (1..=n_max)
            .map(|n| hedrite::enumerate::enumerate_graphs(i, n).len())
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(k, c)| format!("{}:{}", k + 1, c))
            .collect();
        println!("i={i} {} ({:.1?})", counts.join(" "), t.elapsed());
    }
}
