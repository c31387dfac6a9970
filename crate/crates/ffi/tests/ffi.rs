use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use p3_walls_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    p3_string_free(s);
    out
}

unsafe fn parse(text: &str) -> *mut P3Character {
    let mut v = ptr::null_mut();
    assert_eq!(p3_character_parse(cstr(text).as_ptr(), &mut v), P3Status::Ok);
    v
}

unsafe fn last_error() -> String {
    CStr::from_ptr(p3_last_error()).to_string_lossy().into_owned()
}

#[test]
fn handles_round_trip() {
    unsafe {
        let v = parse("0,1,-1/2,1/6");
        let mut d = ptr::null_mut();
        assert_eq!(p3_character_dual(v, &mut d), P3Status::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(p3_character_to_string(d, &mut s), P3Status::Ok);
        assert_eq!(take(s), "0,-1,-1/2,-1/6");

        let o = parse("1,0,0,0");
        let mut o3 = ptr::null_mut();
        assert_eq!(p3_character_tensor_line(o, 3, &mut o3), P3Status::Ok);
        assert_eq!(p3_character_to_string(o3, &mut s), P3Status::Ok);
        assert_eq!(take(s), "1,3,9/2,9/2");
        for h in [v, d, o, o3] {
            p3_character_free(h);
        }
        p3_character_free(ptr::null_mut());
    }
}

#[test]
fn parse_errors_and_null_pointers() {
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(p3_character_parse(cstr("1,1/2,0,0").as_ptr(), &mut v), P3Status::Parse);
        assert!(v.is_null());
        assert!(last_error().contains("lattice"));
        assert_eq!(p3_character_parse(ptr::null(), &mut v), P3Status::NullPointer);
        assert_eq!(p3_character_parse(cstr("1,0,0,0").as_ptr(), ptr::null_mut()), P3Status::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(p3_character_parse(bad.as_ptr().cast(), &mut v), P3Status::InvalidUtf8);
        let mut s = ptr::null_mut();
        assert_eq!(p3_character_to_string(ptr::null(), &mut s), P3Status::NullPointer);
    }
}

#[test]
fn json_entry_points() {
    unsafe {
        let h = parse("0,1,-1/2,1/6");
        let o = parse("1,0,0,0");
        let mut out = ptr::null_mut();
        let status = p3_slope(h, cstr("lambda").as_ptr(), cstr("-2").as_ptr(), cstr("1").as_ptr(), cstr("1/3").as_ptr(), &mut out);
        assert_eq!(status, P3Status::Ok);
        assert!(take(out).contains(r#""value":"4/9""#));

        assert_eq!(p3_slope(h, cstr("mu").as_ptr(), ptr::null(), ptr::null(), ptr::null(), &mut out), P3Status::Ok);
        assert!(take(out).contains(r#""value":"inf""#));

        assert_eq!(p3_tilt_wall(o, h, &mut out), P3Status::Ok);
        let text = take(out);
        assert!(text.contains(r#""center":"-1/2""#) && text.contains(r#""radius2":"1/4""#));

        let o3 = parse("1,3,9/2,9/2");
        let c = parse("0,0,2,3");
        let status = p3_bridgeland_wall_section(o3, c, cstr("1/3").as_ptr(), cstr("3/2").as_ptr(), &mut out);
        assert_eq!(status, P3Status::Ok);
        assert!(take(out).contains(r#""a":["3/4"]"#));

        let t = parse("0,0,1,-1");
        let status = p3_asym_compare(h, t, cstr("left").as_ptr(), ptr::null(), cstr("1/3").as_ptr(), &mut out);
        assert_eq!(status, P3Status::Ok);
        let text = take(out);
        assert!(text.contains(r#""sign":"less""#) && text.contains(r#""order":1"#));

        let status = p3_asym_compare(h, t, cstr("up").as_ptr(), ptr::null(), cstr("1/3").as_ptr(), &mut out);
        assert_eq!(status, P3Status::Parse);
        let status = p3_asym_compare(o, t, cstr("left").as_ptr(), cstr("1").as_ptr(), cstr("1/3").as_ptr(), &mut out);
        assert_eq!(status, P3Status::Domain);
        assert!(last_error().contains("InvalidCurve"));

        let z = parse("0,0,0,0");
        assert_eq!(p3_slope(z, cstr("mu").as_ptr(), ptr::null(), ptr::null(), ptr::null(), &mut out), P3Status::Domain);
        for x in [h, o, o3, c, t, z] {
            p3_character_free(x);
        }
    }
}

#[test]
fn run_matches_the_command_line() {
    unsafe {
        let args: Vec<CString> = ["slope", "mu", "--ch", "0,0,2,3"].iter().map(|s| cstr(s)).collect();
        let argv: Vec<*const c_char> = args.iter().map(|s| s.as_ptr()).collect();
        let (mut out, mut err) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(p3_run(argv.len() as i32, argv.as_ptr(), &mut out, &mut err), 0);
        assert_eq!(take(out), "{\"schema_version\":1,\"value\":\"inf\"}\n");
        assert_eq!(take(err), "");

        let args: Vec<CString> = ["slope", "mu", "--ch", "0,0,0,0"].iter().map(|s| cstr(s)).collect();
        let argv: Vec<*const c_char> = args.iter().map(|s| s.as_ptr()).collect();
        assert_eq!(p3_run(argv.len() as i32, argv.as_ptr(), ptr::null_mut(), &mut err), 2);
        assert!(take(err).contains("ZeroCharacter"));

        assert_eq!(p3_run(1, ptr::null(), ptr::null_mut(), ptr::null_mut()), -1);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/p3_walls.h")).unwrap();
    for name in [
        "typedef struct P3Character P3Character",
        "P3_STATUS_OK = 0",
        "P3_STATUS_PANIC = 5",
        "p3_character_parse",
        "p3_character_free",
        "p3_character_to_string",
        "p3_character_dual",
        "p3_character_tensor_line",
        "p3_slope",
        "p3_tilt_wall",
        "p3_bridgeland_wall_section",
        "p3_asym_compare",
        "p3_run",
        "p3_string_free",
        "p3_last_error",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles and runs a small C program against the static library.
#[test]
fn c_program_links_against_the_static_library() {
    let Ok(exe) = std::env::current_exe() else { return };
    let Some(profile_dir) = exe.parent().and_then(|d| d.parent()).map(PathBuf::from) else { return };
    let lib = profile_dir.join("libp3_walls_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include <string.h>
#include "p3_walls.h"

int main(void) {
    P3Character *v = NULL, *d = NULL;
    char *text = NULL;
    if (p3_character_parse("0,1,-1/2,1/6", &v) != P3_STATUS_OK) return 1;
    if (p3_character_dual(v, &d) != P3_STATUS_OK) return 2;
    if (p3_character_to_string(d, &text) != P3_STATUS_OK) return 3;
    printf("%s\n", text);
    p3_string_free(text);
    if (p3_character_parse("1,2", &v) != P3_STATUS_PARSE) return 4;
    printf("%s\n", p3_last_error());
    p3_character_free(d);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("0,-1,-1/2,-1/6\n"), "{stdout}");
    assert!(stdout.contains("four components"), "{stdout}");
}
