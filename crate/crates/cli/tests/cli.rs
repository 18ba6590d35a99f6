use std::path::PathBuf;
use std::process::{Command, Output};

use jackgl::dunkl::{LaurentJson, LaurentPoly};
use jackgl::fock::{FockEigenJson, WedgeVector};
use jackgl::symfunc::SymFuncJson;
use jackgl::yangian::{BlockTable, DrinfeldReport, DrinfeldSet, RibbonTable};
use jackgl::{ParamRational, Partition, SymFunc};
use serde::de::DeserializeOwned;

fn jackgl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jackgl")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = jackgl(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn parsed<T: DeserializeOwned>(args: &[&str]) -> T {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn code(args: &[&str]) -> i32 {
    jackgl(args).status.code().unwrap()
}

#[test]
fn jack_two_rows() {
    let args = ["jack", "--partition", "2", "--N", "1", "--gamma", "formal", "--basis", "m", "--format", "json"];
    assert_eq!(stdout(&args), golden("jack_2_formal.json"));
    let f: SymFuncJson = parsed(&args);
    let f = SymFunc::from_json(&f);
    assert_eq!(f.coeff(&Partition::of(&[1, 1])), "2*g/(g+1)".parse::<ParamRational>().unwrap());
    assert_eq!(stdout(&["jack", "--partition", "2,1", "--N", "2"]), golden("jack_21_n2.json"));
}

#[test]
fn jack_gamma_sentinels() {
    let at = |g: &str| SymFunc::from_json(&parsed::<SymFuncJson>(&["jack", "--partition", "2", "--N", "1", "--gamma", g]));
    let c = |g: &str| at(g).coeff(&Partition::of(&[1, 1])).to_string();
    assert_eq!(c("inf"), "2");
    assert_eq!(c("0"), "0");
    assert_eq!(c("1"), "1");
    assert_eq!(c("1/2"), "2/3");
}

#[test]
fn skew_drinfeld_polynomials() {
    let args = ["drinfeld", "--skew", "5,5,3,3,1/3,3,2,2", "--N", "3"];
    assert_eq!(stdout(&args), golden("drinfeld_skew.json"));
    let r: DrinfeldReport = parsed(&args);
    assert_eq!(r.polynomials, vec!["u-4", "(u-1)*(u+2)*(u+3)"]);
    let d = DrinfeldSet::from_json(&r.roots).unwrap();
    assert_eq!(d.polynomial(2), "(u-1)*(u+2)*(u+3)");
    let t = stdout(&["drinfeld", "--m", "0^2,1,2^3", "--N", "3", "--format", "text"]);
    assert_eq!(t, "P1 = u+2\nP2 = u\n");
}

#[test]
fn basic_block_census() {
    let args = ["decompose", "--N", "3", "--m", "0^2,1,2^3", "--module", "basic"];
    assert_eq!(stdout(&args), golden("decompose_basic.json"));
    let t: BlockTable = parsed(&args);
    assert_eq!(t.members.len(), 8);
    assert!(!t.members.contains(&Partition::of(&[3, 3])));
    assert_eq!(t.singular, Partition::of(&[2, 2]));
    let f: BlockTable = parsed(&["decompose", "--N", "3", "--m", "0^2,1,2^3"]);
    assert_eq!(f.members.len(), 9);
    let text = ["decompose", "--N", "3", "--m", "0^2,1,2^3", "--module", "fock", "--format", "text"];
    assert_eq!(stdout(&text), golden("decompose_fock.txt"));
}

#[test]
fn decompose_by_degree() {
    let all: Vec<BlockTable> = parsed(&["decompose", "--N", "2", "--degree-max", "5"]);
    let members: usize = all.iter().map(|t| t.members.iter().filter(|l| l.weight() <= 5).count()).sum();
    assert_eq!(members, 1 + 1 + 2 + 3 + 5 + 7);
    let basic: Vec<BlockTable> = parsed(&["decompose", "--N", "2", "--degree-max", "5", "--module", "basic"]);
    assert!(basic.len() < all.len());
}

#[test]
fn ribbon_tableaux() {
    let args = ["ribbon", "--N", "3", "--m", "0^2,1"];
    assert_eq!(stdout(&args), golden("ribbon_21.json"));
    let r: RibbonTable = parsed(&args);
    assert_eq!(r.ribbon, vec![2, 1]);
    assert_eq!(r.tableaux.len(), 8);
}

#[test]
fn nonsym_and_fock_roundtrip() {
    let j: LaurentJson = parsed(&["nonsym", "--t=-1,1", "--beta", "formal"]);
    let e = LaurentPoly::from_json(&j).unwrap();
    assert_eq!(e.coeff(&[-1, 1]), ParamRational::one());
    assert_eq!(e.coeff(&[0, 0]).to_string(), "b/(b+1)");
    let x: FockEigenJson = parsed(&["fock", "--N", "2", "--n", "3", "--beta", "1/2", "--partition", "2"]);
    let v = WedgeVector::from_json(&x.vector).unwrap();
    assert_eq!(v.terms().len(), 2);
    assert_eq!(x.energy.to_string(), "15/2");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["jack", "--partition", "3,1", "--N", "2", "--basis", "s"][..],
        &["macdonald", "--partition", "2,1"],
        &["decompose", "--N", "3", "--degree-max", "4", "--format", "text"],
        &["verify", "--suite", "yangian", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn verify_suites_pass() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["verify", "--format", "json"])).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() >= 20);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["jack", "--partition", "2,x", "--N", "1"]), 2);
    assert_eq!(code(&["jack", "--partition", "1", "--N", "1", "--gamma", "0.5"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["decompose", "--N", "3", "--m", "0^x"]), 2);
    assert_eq!(code(&["fock", "--N", "2", "--n", "2", "--beta", "-1", "--partition", "1"]), 2);
    // Well-formed but outside the domain.
    assert_eq!(code(&["ribbon", "--N", "3", "--m", "0,1,2"]), 1);
    assert_eq!(code(&["decompose", "--N", "2", "--m", "0^2", "--module", "basic"]), 1);
    assert_eq!(code(&["fock", "--N", "2", "--n", "1", "--beta", "1", "--partition", "1,1"]), 1);
    assert_eq!(code(&["drinfeld", "--N", "3", "--skew", "2/3"]), 1);
}
