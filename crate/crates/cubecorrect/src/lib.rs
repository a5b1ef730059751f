//! Local correction and local list correction for degree-d multilinear
//! polynomials from the Boolean cube into Abelian groups.
//!
//! * [`groups`]: exact Abelian group arithmetic.
//! * [`poly`]: multilinear polynomials, evaluation, restriction, distance.
//! * [`oracle`]: query-counted function oracles and corruption models.
//! * [`subcube`]: subcube embeddings, spanned subcubes, 2-to-1 pairings.
//! * [`interpolate`]: weight-balanced interpolating sets, integral
//!   interpolation coefficients, slice coefficients for torsion groups.
//! * [`correct`]: unique local correctors.
//! * [`listdecode`]: brute-force list decoding and the local list corrector.
//! * [`lab`]: experiments checking combinatorial lemmas at small scale.
//! * [`cli`]: command-line front end.

pub mod cli;
pub mod correct;
pub mod groups;
pub mod interpolate;
pub mod lab;
pub mod listdecode;
pub mod oracle;
pub mod poly;
pub mod seeding;
pub mod subcube;
