//! Brute-force oracles used by the acceptance suite. They share no
//! algorithmic code with the modules they check: matrices are plain `u64`
//! arrays reduced mod `p`, root data is read off coordinates.

pub mod finite;
pub mod levi;
pub mod modp;
pub mod nilradical;
pub mod primes;
pub mod roots;
pub mod specialize;
