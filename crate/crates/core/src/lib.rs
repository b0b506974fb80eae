//! Splitting of binary operations over an arbitrary signature.
//!
//! The library works with varieties of algebras having a family of binary
//! operations. From a presentation of such a variety by polylinear identities
//! it generates the identity systems of the associated di-, tri- and skew
//! trialgebras and of their dendriform counterparts, by splitting every
//! operation into left/right/middle parts driven by a set of emphasized
//! variables. The companion engine evaluates the generated identities on
//! finite-dimensional algebras given by exact rational structure constants,
//! checks Rota-Baxter operators, and builds the doubling constructions that
//! embed dendriform algebras into Rota-Baxter algebras.

pub mod doubling;
pub mod error;
pub mod fdalg;
pub mod koszul;
pub mod linalg;
pub mod successor;
pub mod terms;
pub mod varieties;

pub use error::Error;

/// Exact rational scalar used everywhere; no floating point in the library.
pub type Q = num_rational::BigRational;

/// Shorthand for building a rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Shorthand for building a rational from a ratio of integers.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Parses a rational written as `p` or `p/q`, rejecting zero denominators.
pub fn parse_rational(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: num_bigint::BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational `{s}`")))?;
    let den: num_bigint::BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational `{s}`")))?;
    if den == 0.into() {
        return Err(Error::invalid(format!("zero denominator in `{s}`")));
    }
    Ok(Q::new(num, den))
}
