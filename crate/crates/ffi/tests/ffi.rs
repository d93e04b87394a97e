use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hfmap_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(hfmap_last_error()) }.to_string_lossy().into_owned()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    hfmap_string_free(s);
    out
}

#[test]
fn index_and_group() {
    unsafe {
        let mut idx = 0u64;
        assert_eq!(hfmap_parson_index(4, 5, &mut idx), HfmapStatus::Ok);
        assert_eq!(idx, 120);

        let mut g = ptr::null_mut();
        assert_eq!(hfmap_group_new(4, 5, 0, &mut g), HfmapStatus::Ok);
        let mut order = 0usize;
        assert_eq!(hfmap_group_order(g, &mut order), HfmapStatus::Ok);
        assert_eq!(order, 120);
        hfmap_group_free(g);

        assert_eq!(hfmap_group_new(4, 5, 10, &mut g), HfmapStatus::GroupTooLarge);
        assert!(last_error().contains("10"));
        assert_eq!(hfmap_parson_index(5, 5, &mut idx), HfmapStatus::InvalidParams);
        assert!(!last_error().is_empty());
    }
}

#[test]
fn map_invariants() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(hfmap_map_new(4, 5, 0, &mut m), HfmapStatus::Ok);
        let mut inv = HfmapInvariants::default();
        assert_eq!(hfmap_map_invariants(m, &mut inv), HfmapStatus::Ok);
        assert_eq!((inv.vertices, inv.edges, inv.faces, inv.genus), (24, 60, 30, 4));
        assert_eq!((inv.vertex_valency, inv.face_size), (5, 4));
        let mut s = ptr::null_mut();
        assert_eq!(hfmap_map_to_json(m, &mut s), HfmapStatus::Ok);
        assert!(take(s).contains("\"genus\":4"));
        hfmap_map_free(m);
    }
}

#[test]
fn pairing() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(hfmap_pairing_paper(&mut p), HfmapStatus::Ok);
        let mut sides = 0usize;
        hfmap_pairing_sides(p, &mut sides);
        assert_eq!(sides, 20);
        let mut ok = false;
        assert_eq!(hfmap_pairing_rule_check(p, &mut ok), HfmapStatus::Ok);
        assert!(ok);
        let mut genus = 0i64;
        hfmap_pairing_genus(p, &mut genus);
        assert_eq!(genus, 4);
        let mut partner = 0usize;
        assert_eq!(hfmap_pairing_partner(p, 2, &mut partner), HfmapStatus::Ok);
        assert_eq!(partner, 5);
        assert_eq!(hfmap_pairing_partner(p, 21, &mut partner), HfmapStatus::OutOfRange);

        let mut classes = [0usize; 20];
        let mut count = 0usize;
        assert_eq!(hfmap_pairing_corner_classes(p, classes.as_mut_ptr(), 20, &mut count), HfmapStatus::Ok);
        assert_eq!(count, 3);
        for k in (1..=20).step_by(2) {
            assert_eq!(classes[k - 1], classes[0]);
        }
        assert_eq!(hfmap_pairing_corner_classes(p, classes.as_mut_ptr(), 5, &mut count), HfmapStatus::OutOfRange);
        hfmap_pairing_free(p);

        let bad = CString::new("1 2\n1 3\n").unwrap();
        assert_ne!(hfmap_pairing_parse(bad.as_ptr(), &mut p), HfmapStatus::Ok);
        assert!(!last_error().is_empty());
        let good = CString::new("# square\n1 3\n2 4\n").unwrap();
        assert_eq!(hfmap_pairing_parse(good.as_ptr(), &mut p), HfmapStatus::Ok);
        hfmap_pairing_genus(p, &mut genus);
        assert_eq!(genus, 1);
        hfmap_pairing_free(p);
    }
}

#[test]
fn renders() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hfmap_render_quotient(4, 5, HfmapFormat::Dot, &mut s), HfmapStatus::Ok);
        let dot = take(s);
        assert!(dot.starts_with("graph"));
        assert_eq!(dot.matches(" -- ").count(), 60);
        assert_eq!(hfmap_render_universal(4, 3, HfmapModel::Disk, &mut s), HfmapStatus::Ok);
        assert!(take(s).contains("<svg"));
        assert_eq!(hfmap_render_universal(4, 99, HfmapModel::HalfPlane, &mut s), HfmapStatus::OutOfRange);
        assert_eq!(hfmap_render_quotient(4, 6, HfmapFormat::Svg, &mut s), HfmapStatus::EvenModulus);
    }
}

#[test]
fn verify_and_nulls() {
    unsafe {
        let (mut passed, mut failed) = (0u32, 0u32);
        assert_eq!(hfmap_verify_all(&mut passed, &mut failed), HfmapStatus::Ok);
        assert_eq!((passed, failed), (10, 0));
        assert_eq!(hfmap_verify_all(ptr::null_mut(), &mut failed), HfmapStatus::NullPointer);
        assert_eq!(hfmap_parson_index(4, 5, ptr::null_mut()), HfmapStatus::NullPointer);
        assert_eq!(hfmap_map_invariants(ptr::null(), ptr::null_mut()), HfmapStatus::NullPointer);
        hfmap_group_free(ptr::null_mut());
        hfmap_string_free(ptr::null_mut());
        assert!(!CStr::from_ptr(hfmap_version()).to_bytes().is_empty());
    }
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_exports() {
    let header = std::fs::read_to_string(crate_dir().join("include/hfmap.h")).unwrap();
    let src = std::fs::read_to_string(crate_dir().join("src/lib.rs")).unwrap();
    let exported: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 20);
    for f in exported {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    for t in ["typedef struct HfmapGroup HfmapGroup;", "HFMAP_STATUS_OK = 0", "HFMAP_STATUS_PANIC = 99"] {
        assert!(header.contains(t), "{t}");
    }
}

fn staticlib() -> Option<PathBuf> {
    // target/<profile>/deps/ffi-xxxx -> target/<profile>/libhfmap_ffi.a
    let exe = std::env::current_exe().ok()?;
    let lib = exe.parent()?.parent()?.join("libhfmap_ffi.a");
    lib.exists().then_some(lib)
}

fn have(tool: &str) -> bool {
    Command::new(tool).arg("--version").output().is_ok_and(|o| o.status.success())
}

#[test]
fn c_program_links_and_runs() {
    let Some(lib) = staticlib() else {
        let status = Command::new(env!("CARGO"))
            .args(["build", "-p", "hfmap-ffi", "--lib"])
            .status()
            .unwrap();
        assert!(status.success());
        return c_program_with(&staticlib().expect("static library after build"));
    };
    c_program_with(&lib);
}

fn c_program_with(lib: &Path) {
    if !have("cc") {
        eprintln!("cc not found; skipping C link test");
        return;
    }
    let dir = std::env::temp_dir().join(format!("hfmap-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let exe = dir.join("smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/smoke.c"))
        .arg(lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "smoke failed: {stdout}{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout.contains("index 120"));
    assert!(stdout.contains("genus 4"));
    let _ = std::fs::remove_dir_all(dir);
}
