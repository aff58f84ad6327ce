use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nearcentral"))
        .args(args)
        .env_remove("NEARCENTRAL_MAX_N")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "exactly one document: {text}");
    serde_json::from_str(&text).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn genchar_value_and_method() {
    let out = run(&["genchar", "--n", "3", "--mu", "2,1", "--j", "2", "--lambda", "2,1", "--i", "2"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["value"], "1/2");
    assert_eq!(doc["method"], "table");
}

#[test]
fn genchar_methods_agree() {
    let base = ["genchar", "--n", "5", "--mu", "3,2", "--j", "2", "--lambda", "3,2", "--i", "3"];
    let values: Vec<Value> = ["strahov", "oracle"]
        .iter()
        .map(|m| {
            let mut args = base.to_vec();
            args.extend(["--method", m]);
            json(&run(&args))["value"].clone()
        })
        .collect();
    assert_eq!(values[0], values[1]);
    let auto = json(&run(&base));
    assert_eq!(auto["value"], values[0]);
    assert_eq!(auto["method"], "strahov");
}

#[test]
fn star_counts() {
    let doc = json(&run(&["starfact", "count", "--lambda", "2,1", "--i", "2", "--r", "3"]));
    assert_eq!(doc["count"], "3");
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["r"], 3);
    let doc = json(&run(&["starfact", "count", "--lambda", "3,1", "--i", "3", "--r", "5", "--method", "enumerate"]));
    let by_chars = json(&run(&["starfact", "count", "--lambda", "3,1", "--i", "3", "--r", "5"]));
    assert_eq!(doc["count"], by_chars["count"]);
    assert_eq!(json(&run(&["starfact", "class", "--lambda", "2,1", "--r", "3"]))["count"], "8");
    assert_eq!(json(&run(&["starfact", "cycles", "--n", "3", "--k", "3", "--r", "2"]))["count"], "2");
    let closed = json(&run(&["starfact", "closed", "--case", "full-cycle", "--n", "7", "--r", "9"]));
    let direct = json(&run(&["starfact", "count", "--lambda", "7", "--i", "7", "--r", "9"]));
    assert_eq!(closed["count"], direct["count"]);
}

#[test]
fn connection_methods_agree() {
    for method in ["characters", "oracle"] {
        let out = run(&["connection", "--a", "2,1@2", "--b", "2,1@2", "--target", "1,1,1@1", "--method", method]);
        assert_eq!(json(&out)["coefficient"], "2");
    }
}

#[test]
fn listings() {
    let doc = json(&run(&["partitions", "--n", "4"]));
    assert_eq!(doc["count"], "5");
    assert_eq!(doc["partitions"][0]["partition"], "4");
    let doc = json(&run(&["partitions", "--n", "3", "--marked"]));
    assert_eq!(doc["count"], "4");
    let doc = json(&run(&["tableaux", "--shape", "3,2"]));
    assert_eq!(doc["count"], "5");
    let text = run(&["tableaux", "--shape", "2,1", "--format", "text"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap(), "1 3\n2\n\n1 2\n3\n");
}

#[test]
fn character_table_formats() {
    let doc = json(&run(&["chartable", "--n", "3"]));
    assert_eq!(doc["values"][1], serde_json::json!(["-1", "0", "2"]));
    let csv = run(&["chartable", "--n", "3", "--format", "csv"]);
    let csv = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "lambda,\"3\",\"2,1\",\"1,1,1\"");
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn verify_small_passes() {
    let out = run(&["oracle", "verify", "--max-n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn exit_codes() {
    let out = run(&["genchar", "--n", "3", "--mu", "2,1", "--j", "3", "--lambda", "2,1", "--i", "2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["error"]["kind"], "domain");

    let out = run(&["genchar", "--n", "10", "--mu", "9,1", "--j", "9", "--lambda", "5,5", "--i", "5"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"]["kind"], "guard");

    let out = run(&["--guard-n", "4", "genchar", "--n", "5", "--mu", "3,2", "--j", "2", "--lambda", "3,2", "--i", "3"]);
    assert_eq!(code(&out), 2);

    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 64);
    assert_eq!(json(&out)["error"]["kind"], "usage");
    assert!(!out.stderr.is_empty());

    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["oracle", "verify", "--max-n", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
