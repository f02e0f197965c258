use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub name: String,
    pub params: String,
    pub status: Status,
    pub left: Option<String>,
    pub right: Option<String>,
    pub elapsed_ms: f64,
}

impl Record {
    /// Runs `f`, timing it. An `Err` becomes a failing record carrying the message.
    pub fn timed(
        name: impl Into<String>,
        params: impl Into<String>,
        f: impl FnOnce() -> Result<(bool, Option<String>, Option<String>), String>,
    ) -> Record {
        let t = Instant::now();
        let (status, left, right) = match f() {
            Ok((ok, l, r)) => (if ok { Status::Pass } else { Status::Fail }, l, r),
            Err(e) => (Status::Fail, Some(format!("error: {e}")), None),
        };
        Record {
            name: name.into(),
            params: params.into(),
            status,
            left,
            right,
            elapsed_ms: t.elapsed().as_secs_f64() * 1e3,
        }
    }

    /// An equality check of two displayed values.
    pub fn compare<T: PartialEq + ToString>(
        name: impl Into<String>,
        params: impl Into<String>,
        f: impl FnOnce() -> Result<(T, T), String>,
    ) -> Record {
        Record::timed(name, params, || {
            let (l, r) = f()?;
            Ok((l == r, Some(l.to_string()), Some(r.to_string())))
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub command: String,
    pub qs: Vec<u32>,
    pub order: Option<usize>,
    pub max_n: Option<u32>,
    pub max_brute_order: u64,
    pub skip_brute: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub meta: Meta,
    pub passed: bool,
    pub digest: String,
    pub records: Vec<Record>,
}

#[derive(Serialize)]
struct Canonical<'a> {
    name: &'a str,
    params: &'a str,
    status: Status,
    left: &'a Option<String>,
    right: &'a Option<String>,
}

impl Report {
    /// Sorts records canonically and computes the digest, which ignores timings.
    pub fn new(meta: Meta, mut records: Vec<Record>) -> Report {
        records.sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
        let canonical: Vec<Canonical> = records
            .iter()
            .map(|r| Canonical { name: &r.name, params: &r.params, status: r.status, left: &r.left, right: &r.right })
            .collect();
        let mut hasher = Sha256::new();
        hasher.update(serde_json::to_vec(&(&meta, &canonical)).expect("serializable"));
        let digest = hasher.finalize().iter().fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        });
        let passed = records.iter().all(|r| r.status == Status::Pass);
        Report { meta, passed, digest, records }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("name\tparams\tstatus\tleft\tright\telapsed_ms\n");
        for r in &self.records {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
            };
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{:.3}",
                r.name,
                r.params,
                status,
                r.left.as_deref().unwrap_or(""),
                r.right.as_deref().unwrap_or(""),
                r.elapsed_ms
            );
        }
        let total = self.records.len();
        let failed = self.records.iter().filter(|r| r.status == Status::Fail).count();
        let _ = writeln!(out, "# {total} checks, {failed} failed, digest {}", self.digest);
        out
    }
}
