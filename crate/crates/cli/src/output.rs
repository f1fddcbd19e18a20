use serde_json::{json, Map, Value};

use crate::{Common, Format};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "affschub/1";

pub struct Out<'a> {
    pub common: &'a Common,
    pub command: &'static str,
}

impl Out<'_> {
    pub fn json(&self) -> bool {
        self.common.format == Format::Json
    }

    /// Prints a text line (text mode only).
    pub fn line(&self, s: impl AsRef<str>) {
        if !self.json() {
            println!("{}", s.as_ref());
        }
    }

    /// Prints the JSON envelope around `payload` (JSON mode only).
    pub fn document(&self, payload: Value) {
        if !self.json() {
            return;
        }
        let mut doc = Map::new();
        doc.insert("schema".into(), json!(SCHEMA));
        doc.insert("command".into(), json!(self.command));
        doc.insert("seed".into(), json!(self.common.seed));
        if let Value::Object(m) = payload {
            doc.extend(m);
        } else {
            doc.insert("result".into(), payload);
        }
        println!("{}", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"));
    }
}
