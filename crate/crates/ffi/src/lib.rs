//! C ABI over `contact_verma`.
//!
//! Modules and characters are opaque heap handles created by `cv_*_new`
//! and released by the matching `cv_*_free`. Every fallible function returns
//! a [`CvStatus`] and writes its result through an out pointer, which is left
//! untouched on failure. Panics never cross the boundary.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use contact_verma::characters::{self, character_series, size_from_series, CharacterSeries, CharacterTarget, SizeReport};
use contact_verma::homology::{degree_homology, ComplexNode};
use contact_verma::verma::{singular_space, ModuleCoords, Quadrant, SingularMode};
use contact_verma::Error;
use num_traits::ToPrimitive;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidModule = 3,
    /// A map is undefined on the requested module.
    InvalidMorphism = 4,
    /// Two consecutive maps did not compose to zero.
    NonzeroComposition = 5,
    /// A truncated character did not stabilize in the given window.
    NotStabilized = 6,
    /// A value does not fit the C return type.
    Overflow = 7,
    Panic = 8,
}

impl From<Error> for CvStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidModule(_) => CvStatus::InvalidModule,
            Error::InvalidMorphism(_) => CvStatus::InvalidMorphism,
            Error::NonzeroComposition(_) => CvStatus::NonzeroComposition,
            _ => CvStatus::InvalidArgument,
        }
    }
}

/// Opaque handle to a module `M_X^{m,n}`.
pub struct CvModule(ModuleCoords);

/// Opaque handle to a truncated character.
pub struct CvCharacter(CharacterSeries);

fn guard(f: impl FnOnce() -> Result<(), CvStatus>) -> CvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CvStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => CvStatus::Panic,
    }
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), CvStatus> {
    if out.is_null() {
        return Err(CvStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn module<'a>(m: *const CvModule) -> Result<&'a CvModule, CvStatus> {
    m.as_ref().ok_or(CvStatus::NullPointer)
}

fn quadrant(q: c_char) -> Result<Quadrant, CvStatus> {
    let c = u8::try_from(q).map_err(|_| CvStatus::InvalidArgument)? as char;
    c.to_string().parse().map_err(|_| CvStatus::InvalidArgument)
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn cv_status_message(status: CvStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CvStatus::Ok => c"ok",
        CvStatus::NullPointer => c"null pointer argument",
        CvStatus::InvalidArgument => c"invalid argument",
        CvStatus::InvalidModule => c"invalid module coordinates",
        CvStatus::InvalidMorphism => c"map not defined on this module",
        CvStatus::NonzeroComposition => c"consecutive maps do not compose to zero",
        CvStatus::NotStabilized => c"character did not stabilize in the window",
        CvStatus::Overflow => c"value out of range",
        CvStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

/// Creates `M_X^{m,n}`; `quadrant_letter` is one of `'A'`..`'D'`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cv_module_new(quadrant_letter: c_char, m: i32, n: i32, out: *mut *mut CvModule) -> CvStatus {
    guard(|| {
        let c = ModuleCoords::new(quadrant(quadrant_letter)?, m, n)?;
        write(out, Box::into_raw(Box::new(CvModule(c))))
    })
}

/// Parses `X:m,n`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cv_module_parse(text: *const c_char, out: *mut *mut CvModule) -> CvStatus {
    guard(|| {
        if text.is_null() {
            return Err(CvStatus::NullPointer);
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| CvStatus::InvalidArgument)?;
        let c: ModuleCoords = s.parse()?;
        write(out, Box::into_raw(Box::new(CvModule(c))))
    })
}

/// Releases a module; null is ignored.
///
/// # Safety
/// `m` must come from `cv_module_new` or `cv_module_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cv_module_free(m: *mut CvModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Dimension of the weight module `V_X^{m,n}`.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cv_module_dim_v(m: *const CvModule, out: *mut usize) -> CvStatus {
    guard(|| write(out, module(m)?.0.dim_v()))
}

/// Dimension of the degree-`degree` piece of the Verma module.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cv_module_graded_dim(m: *const CvModule, degree: u32, out: *mut usize) -> CvStatus {
    guard(|| write(out, contact_verma::verma::graded_keys(module(m)?.0, degree).len()))
}

/// Homology of the complex at `m` in degree `degree`.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cv_homology_dim(m: *const CvModule, degree: u32, out: *mut usize) -> CvStatus {
    guard(|| {
        let node = ComplexNode::new(module(m)?.0)?;
        write(out, degree_homology(&node, degree)?.dim)
    })
}

/// Number of independent singular vectors in degree `degree`; highest-weight
/// ones only when `highest_weight` is true.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cv_singular_count(m: *const CvModule, degree: u32, highest_weight: bool, out: *mut usize) -> CvStatus {
    guard(|| {
        let mode = if highest_weight { SingularMode::HighestWeight } else { SingularMode::Full };
        write(out, singular_space(module(m)?.0, degree, mode).len())
    })
}

/// Truncated character of the Verma module at `m`, or of its irreducible
/// quotient when `irreducible` is true.
///
/// # Safety
/// `m` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cv_character_new(m: *const CvModule, irreducible: bool, max_degree: u32, out: *mut *mut CvCharacter) -> CvStatus {
    guard(|| {
        let c = module(m)?.0;
        let target = if irreducible { CharacterTarget::Irreducible(c) } else { CharacterTarget::Verma(c) };
        let ch = character_series(target, max_degree)?;
        write(out, Box::into_raw(Box::new(CvCharacter(ch))))
    })
}

/// Releases a character; null is ignored.
///
/// # Safety
/// `ch` must come from `cv_character_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cv_character_free(ch: *mut CvCharacter) {
    if !ch.is_null() {
        drop(Box::from_raw(ch));
    }
}

/// Number of stored coefficients.
///
/// # Safety
/// `ch` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cv_character_len(ch: *const CvCharacter, out: *mut usize) -> CvStatus {
    guard(|| write(out, ch.as_ref().ok_or(CvStatus::NullPointer)?.0.coeffs.len()))
}

/// Coefficient of `s^{leading + degree}`.
///
/// # Safety
/// `ch` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cv_character_coeff(ch: *const CvCharacter, degree: usize, out: *mut i64) -> CvStatus {
    guard(|| {
        let c = ch.as_ref().ok_or(CvStatus::NullPointer)?;
        write(out, *c.0.coeffs.get(degree).ok_or(CvStatus::InvalidArgument)?)
    })
}

/// Leading exponent as a reduced fraction `num / den`, `den > 0`.
///
/// # Safety
/// `ch` must be a live handle; `num` and `den` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cv_character_leading_exponent(ch: *const CvCharacter, num: *mut i64, den: *mut i64) -> CvStatus {
    guard(|| {
        let e = &ch.as_ref().ok_or(CvStatus::NullPointer)?.0.leading_exponent;
        let (p, q) = (e.numer().to_i64().ok_or(CvStatus::Overflow)?, e.denom().to_i64().ok_or(CvStatus::Overflow)?);
        if den.is_null() {
            return Err(CvStatus::NullPointer);
        }
        write(num, p)?;
        write(den, q)
    })
}

/// Size read off the character as a reduced fraction `num / den`; returns
/// `NOT_STABILIZED` when the window is too short.
///
/// # Safety
/// `ch` must be a live handle; `num` and `den` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cv_character_size(ch: *const CvCharacter, num: *mut i64, den: *mut i64) -> CvStatus {
    guard(|| {
        let c = ch.as_ref().ok_or(CvStatus::NullPointer)?;
        match size_from_series(&c.0) {
            SizeReport::Stabilized { size, .. } => {
                let (p, q) = (size.numer().to_i64().ok_or(CvStatus::Overflow)?, size.denom().to_i64().ok_or(CvStatus::Overflow)?);
                if den.is_null() {
                    return Err(CvStatus::NullPointer);
                }
                write(num, p)?;
                write(den, q)
            }
            SizeReport::NotStabilized => Err(CvStatus::NotStabilized),
        }
    })
}

/// Closed-form size of the irreducible module of type `quadrant` with `F(m, n, ·, ·)`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cv_size_formula(quadrant_letter: c_char, m: u32, n: u32, out: *mut i64) -> CvStatus {
    guard(|| write(out, characters::size_formula(quadrant(quadrant_letter)?, m, n)))
}

/// Size of the same module computed from its character up to `window`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cv_size_oracle(quadrant_letter: c_char, m: u32, n: u32, window: u32, out: *mut i64) -> CvStatus {
    guard(|| {
        let node = characters::irreducible_node(quadrant(quadrant_letter)?, m, n)?;
        let ch = character_series(CharacterTarget::Irreducible(node), window)?;
        let r = size_from_series(&ch);
        match characters::integral_size(&r) {
            Some(s) => write(out, s),
            None if r == SizeReport::NotStabilized => Err(CvStatus::NotStabilized),
            None => Err(CvStatus::Overflow),
        }
    })
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cv_version() -> *const c_char {
    static V: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(s) => s,
        Err(_) => c"unknown",
    };
    V.as_ptr()
}
