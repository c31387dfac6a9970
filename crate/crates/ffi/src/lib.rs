//! C ABI over `p3-walls`.
//!
//! Characters live behind an opaque `P3Character` handle. Computations that
//! produce structured results return JSON strings with the same schema as the
//! `p3walls` command line. Every entry point returns a [`P3Status`]; on failure
//! [`p3_last_error`] holds a message for the calling thread. Strings handed
//! out by this library must be released with [`p3_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use p3_walls::chern::{dual, tensor_line};
use p3_walls::cli::execute;
use p3_walls::ChernCharacter;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input: a character literal, a rational or a flag.
    Parse = 3,
    /// Well-formed input outside an operation's domain.
    Domain = 4,
    Panic = 5,
}

/// Opaque handle to a Chern character.
pub struct P3Character(ChernCharacter);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn fail(status: P3Status, message: impl Into<String>) -> P3Status {
    set_error(message);
    status
}

/// Runs `f`, turning a panic into [`P3Status::Panic`].
fn guard(f: impl FnOnce() -> P3Status) -> P3Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(P3Status::Panic, message)
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, P3Status> {
    if p.is_null() {
        return Err(fail(P3Status::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(P3Status::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

unsafe fn read_char<'a>(p: *const P3Character, name: &str) -> Result<&'a ChernCharacter, P3Status> {
    p.as_ref()
        .map(|c| &c.0)
        .ok_or_else(|| fail(P3Status::NullPointer, format!("{name} is null")))
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> P3Status {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            P3Status::Ok
        }
        Err(_) => fail(P3Status::Panic, "interior NUL in output"),
    }
}

unsafe fn write_handle(out: *mut *mut P3Character, v: ChernCharacter) -> P3Status {
    *out = Box::into_raw(Box::new(P3Character(v)));
    P3Status::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(x) => x,
            Err(status) => return status,
        }
    };
}

/// Parses `"a,b,c,d"` into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p3_character_parse(text: *const c_char, out: *mut *mut P3Character) -> P3Status {
    guard(|| {
        if out.is_null() {
            return fail(P3Status::NullPointer, "out is null");
        }
        let text = try_status!(read_str(text, "text"));
        match ChernCharacter::parse(text) {
            Ok(v) => write_handle(out, v),
            Err(e) => fail(P3Status::Parse, e.to_string()),
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `v` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn p3_character_free(v: *mut P3Character) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// # Safety
/// `v` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p3_character_to_string(v: *const P3Character, out: *mut *mut c_char) -> P3Status {
    guard(|| {
        if out.is_null() {
            return fail(P3Status::NullPointer, "out is null");
        }
        let v = try_status!(read_char(v, "v"));
        write_string(out, v.to_string())
    })
}

/// # Safety
/// `v` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p3_character_dual(v: *const P3Character, out: *mut *mut P3Character) -> P3Status {
    guard(|| {
        if out.is_null() {
            return fail(P3Status::NullPointer, "out is null");
        }
        let v = try_status!(read_char(v, "v"));
        write_handle(out, dual(v))
    })
}

/// `v ⊗ O(k)`.
///
/// # Safety
/// `v` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p3_character_tensor_line(v: *const P3Character, k: i64, out: *mut *mut P3Character) -> P3Status {
    guard(|| {
        if out.is_null() {
            return fail(P3Status::NullPointer, "out is null");
        }
        let v = try_status!(read_char(v, "v"));
        write_handle(out, tensor_line(v, k))
    })
}

/// Runs a command-line invocation and maps its exit code to a status.
unsafe fn run_json(args: Vec<String>, out_json: *mut *mut c_char) -> P3Status {
    if out_json.is_null() {
        return fail(P3Status::NullPointer, "out_json is null");
    }
    let outcome = execute(std::iter::once("p3walls".to_string()).chain(args));
    match outcome.code {
        0 => write_string(out_json, outcome.stdout.trim_end().to_string()),
        1 => fail(P3Status::Parse, outcome.stderr.trim_end()),
        _ => fail(P3Status::Domain, outcome.stderr.trim_end()),
    }
}

unsafe fn optional(args: &mut Vec<String>, flag: &str, p: *const c_char) -> Result<(), P3Status> {
    if !p.is_null() {
        args.push(flag.to_string());
        args.push(read_str(p, flag)?.to_string());
    }
    Ok(())
}

/// Slope of `v`: `kind` is `"mu"`, `"nu"` or `"lambda"`. `beta` and `alpha2`
/// are rational literals, ignored for `mu`; `s` is only read for `lambda`.
/// Writes `{"value": ...}`.
///
/// # Safety
/// String arguments must be NUL-terminated or null; `v` must be a live
/// handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p3_slope(
    v: *const P3Character,
    kind: *const c_char,
    beta: *const c_char,
    alpha2: *const c_char,
    s: *const c_char,
    out_json: *mut *mut c_char,
) -> P3Status {
    guard(|| {
        let v = try_status!(read_char(v, "v"));
        let kind = try_status!(read_str(kind, "kind"));
        let mut args = vec!["slope".to_string(), kind.to_string(), "--ch".to_string(), v.to_string()];
        if kind != "mu" {
            try_status!(optional(&mut args, "--beta", beta));
            try_status!(optional(&mut args, "--alpha2", alpha2));
        }
        if kind == "lambda" {
            try_status!(optional(&mut args, "--s", s));
        }
        run_json(args, out_json)
    })
}

/// Numerical ν-wall of `v` and `w`.
///
/// # Safety
/// `v`, `w` must be live handles; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p3_tilt_wall(v: *const P3Character, w: *const P3Character, out_json: *mut *mut c_char) -> P3Status {
    guard(|| {
        let v = try_status!(read_char(v, "v"));
        let w = try_status!(read_char(w, "w"));
        run_json(
            vec!["wall".into(), "tilt".into(), "--v".into(), v.to_string(), "--w".into(), w.to_string()],
            out_json,
        )
    })
}

/// Positive `a` on the λ-wall of `v`, `w` at fixed `beta`.
///
/// # Safety
/// `s`, `beta` must be NUL-terminated; `v`, `w` live handles; `out_json`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn p3_bridgeland_wall_section(
    v: *const P3Character,
    w: *const P3Character,
    s: *const c_char,
    beta: *const c_char,
    out_json: *mut *mut c_char,
) -> P3Status {
    guard(|| {
        let v = try_status!(read_char(v, "v"));
        let w = try_status!(read_char(w, "w"));
        let s = try_status!(read_str(s, "s"));
        let beta = try_status!(read_str(beta, "beta"));
        run_json(
            vec![
                "wall".into(),
                "section".into(),
                "--v".into(),
                v.to_string(),
                "--w".into(),
                w.to_string(),
                "--s".into(),
                s.to_string(),
                "--beta".into(),
                beta.to_string(),
            ],
            out_json,
        )
    })
}

/// Eventual sign of `λ(v) − λ(u)` along `a = c·β²`; `side` is `"left"` or
/// `"right"`, `cgamma` may be null for 0.
///
/// # Safety
/// String arguments NUL-terminated (`cgamma` may be null); `v`, `u` live
/// handles; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn p3_asym_compare(
    v: *const P3Character,
    u: *const P3Character,
    side: *const c_char,
    cgamma: *const c_char,
    s: *const c_char,
    out_json: *mut *mut c_char,
) -> P3Status {
    guard(|| {
        let v = try_status!(read_char(v, "v"));
        let u = try_status!(read_char(u, "u"));
        let side = try_status!(read_str(side, "side"));
        let s = try_status!(read_str(s, "s"));
        let mut args = vec![
            "asym".to_string(),
            "compare".into(),
            "--side".into(),
            side.to_string(),
            "--s".into(),
            s.to_string(),
            "--v".into(),
            v.to_string(),
            "--u".into(),
            u.to_string(),
        ];
        try_status!(optional(&mut args, "--cgamma", cgamma));
        run_json(args, out_json)
    })
}

/// Runs the command line with `argv` (without a program name). Returns the
/// process exit code (0, 1 or 2), or −1 if an argument is null or not UTF-8,
/// or a panic occurred. Either output pointer may be null.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn p3_run(argc: c_int, argv: *const *const c_char, out_stdout: *mut *mut c_char, out_stderr: *mut *mut c_char) -> c_int {
    let result = catch_unwind(AssertUnwindSafe(|| {
        if argc < 0 || (argc > 0 && argv.is_null()) {
            set_error("argv is null");
            return -1;
        }
        let mut args = Vec::with_capacity(argc as usize + 1);
        args.push("p3walls".to_string());
        for i in 0..argc as usize {
            match read_str(*argv.add(i), "argv entry") {
                Ok(s) => args.push(s.to_string()),
                Err(_) => return -1,
            }
        }
        let outcome = execute(args);
        if !out_stdout.is_null() {
            write_string(out_stdout, outcome.stdout);
        }
        if !out_stderr.is_null() {
            write_string(out_stderr, outcome.stderr);
        }
        outcome.code
    }));
    result.unwrap_or_else(|_| {
        set_error("panic");
        -1
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn p3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn p3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
