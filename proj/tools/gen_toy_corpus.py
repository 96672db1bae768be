#!/usr/bin/env python3
"""Generate the bundled synthetic Java-like toy corpus.

The output is deterministic for a fixed seed. Files are grouped into
projects (one directory per project) and exercise everything the ingest
stage cares about: license headers, doc comments above methods, trailing
comments, non-ASCII text, long string literals, filtered method names and
files whose name contains "test".
"""

import argparse
import os
import random

PROJECTS = {
    "storage": {
        "pkg": "org.toy.storage",
        "nouns": ["Block", "Segment", "Entry", "Index", "Page", "Buffer", "Record", "Cache"],
        "verbs": ["read", "write", "flush", "compact", "evict", "load"],
        "fields": ["capacity", "offset", "length", "checksum", "blockSize", "entryCount"],
    },
    "network": {
        "pkg": "org.toy.network",
        "nouns": ["Channel", "Packet", "Session", "Request", "Response", "Handler", "Connection", "Frame"],
        "verbs": ["send", "receive", "connect", "close", "dispatch", "encode"],
        "fields": ["timeout", "address", "port", "retryCount", "bufferSize", "sessionId"],
    },
    "security": {
        "pkg": "org.toy.security",
        "nouns": ["AclEntry", "Permission", "Principal", "Token", "Policy", "Credential", "Role", "Group"],
        "verbs": ["check", "grant", "revoke", "validate", "resolve", "merge"],
        "fields": ["accessEntries", "owner", "permission", "defaultEntries", "groupName", "expiry"],
    },
    "scheduler": {
        "pkg": "org.toy.scheduler",
        "nouns": ["Task", "Worker", "Queue", "Job", "Trigger", "Executor", "Slot", "Plan"],
        "verbs": ["submit", "cancel", "schedule", "poll", "assign", "retry"],
        "fields": ["priority", "deadline", "workerCount", "queueSize", "taskId", "interval"],
    },
    "metrics": {
        "pkg": "org.toy.metrics",
        "nouns": ["Counter", "Gauge", "Histogram", "Meter", "Registry", "Reporter", "Sample", "Window"],
        "verbs": ["record", "update", "report", "reset", "collect", "publish"],
        "fields": ["count", "total", "maxValue", "minValue", "interval", "sampleSize"],
    },
}

TYPES = ["int", "long", "String", "boolean", "double"]

LICENSE = """/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
"""


def cap(s):
    return s[0].upper() + s[1:]


def type_default(t):
    return {"int": "0", "long": "0L", "String": "null", "boolean": "false", "double": "0.0"}[t]


class FileGen:
    def __init__(self, rng, project, spec):
        self.rng = rng
        self.project = project
        self.spec = spec

    def pick(self, xs):
        return self.rng.choice(xs)

    def field_decls(self, fields):
        out = []
        for name, t in fields:
            out.append(f"    private {t} {name};\n")
        return "".join(out)

    def getter(self, name, t):
        s = ""
        if self.rng.random() < 0.6:
            s += f"    /** Returns the {name}. */\n"
        s += f"    public {t} get{cap(name)}() {{\n        return {name};\n    }}\n"
        return s

    def setter(self, name, t):
        s = ""
        if self.rng.random() < 0.4:
            s += f"    // Sets the {name}.\n"
        s += f"    public void set{cap(name)}({t} {name}) {{\n        this.{name} = {name};\n    }}\n"
        return s

    def loop_method(self, cls, noun, verb, fields):
        items = noun[0].lower() + noun[1:] + "s"
        var = noun[0].lower() + noun[1:]
        f0 = fields[0][0]
        body = [
            f"    public int {verb}{noun}s(List<{noun}> {items}) {{\n",
            "        int result = 0;\n",
            f"        for ({noun} {var} : {items}) {{\n",
            f"            if ({var} == null) {{\n",
            "                continue;\n",
            "            }\n",
            f"            result += {var}.get{cap(f0)}();\n",
        ]
        if self.rng.random() < 0.5:
            body.append("            result++; // count the visited entry\n")
        body += [
            "        }\n",
            "        return result;\n",
            "    }\n",
        ]
        doc = ""
        if self.rng.random() < 0.7:
            doc = f"    /**\n     * Applies {verb} to every {var} in the list.\n     */\n"
        return doc + "".join(body)

    def check_method(self, noun, verb, fields):
        name, t = fields[1]
        var = noun[0].lower() + noun[1:]
        lines = [
            f"    public boolean {verb}{noun}({noun} {var}) {{\n",
            f"        if ({var} == null) {{\n",
            f"            throw new IllegalArgumentException(\"{var} is null\");\n",
            "        }\n",
        ]
        if t in ("int", "long", "double"):
            lines.append(f"        return {var}.get{cap(name)}() > {name};\n")
        elif t == "boolean":
            lines.append(f"        return {var}.is{cap(name)}() && {name};\n")
        else:
            lines.append(f"        return {name}.equals({var}.get{cap(name)}());\n")
        lines.append("    }\n")
        return "".join(lines)

    def map_method(self, noun, verb):
        var = noun[0].lower() + noun[1:]
        m = f"{var}Map"
        return (
            f"    public {noun} {verb}{noun}ById(String id) {{\n"
            f"        {noun} {var} = {m}.get(id);\n"
            f"        if ({var} == null) {{\n"
            f"            {var} = new {noun}(id);\n"
            f"            {m}.put(id, {var});\n"
            "        }\n"
            f"        return {var};\n"
            "    }\n"
        )

    def builder_method(self, cls, fields):
        lines = [f"    public {cls} copy() {{\n", f"        {cls} copy = new {cls}();\n"]
        for name, _ in fields:
            lines.append(f"        copy.{name} = this.{name};\n")
        lines.append("        return copy;\n    }\n")
        return "".join(lines)

    def long_method(self, cls, fields):
        # More than twenty lines: removed when method filtering is on.
        lines = [f"    public void initialize{cls}() {{\n"]
        for i in range(12):
            name, t = fields[i % len(fields)]
            lines.append(f"        this.{name} = {type_default(t)};\n")
            lines.append(f"        LOG.debug(\"init step {i}\");\n")
        lines.append("    }\n")
        return "".join(lines)

    def to_string(self, cls, fields):
        name = fields[0][0]
        return (
            "    @Override\n"
            "    public String toString() {\n"
            f"        return \"{cls}{{\" + \"{name}=\" + {name} + \"}}\";\n"
            "    }\n"
        )

    def extras(self):
        s = ""
        r = self.rng.random()
        if r < 0.25:
            # Non-English text in a comment and a string.
            s += "    // 这是一个注释 with mixed text\n"
            s += "    private static final String GREETING = \"héllo wörld\";\n"
        elif r < 0.5:
            blob = "".join(self.rng.choice("abcdefghijklmnopqrstuvwxyz0123456789") for _ in range(64))
            s += f"    private static final String SECRET = \"{blob}\";\n"
        elif r < 0.7:
            s += "    private static final String MODE = \"default\";\n"
        return s

    def generate(self, cls, with_to_string, with_long):
        spec = self.spec
        noun = self.pick(spec["nouns"])
        noun2 = self.pick([n for n in spec["nouns"] if n != noun])
        fnames = self.rng.sample(spec["fields"], 3)
        fields = [(f, self.pick(TYPES)) for f in fnames]
        verbs = self.rng.sample(spec["verbs"], 3)

        out = []
        if self.rng.random() < 0.8:
            out.append(LICENSE)
        out.append(f"package {spec['pkg']};\n\n")
        out.append("import java.util.List;\nimport java.util.Map;\nimport java.util.HashMap;\n\n")
        if self.rng.random() < 0.7:
            out.append(f"/**\n * {cls} manages {noun2} instances.\n */\n")
        out.append(f"public class {cls} {{\n\n")
        out.append(f"    private static final Logger LOG = Logger.getLogger({cls}.class);\n")
        out.append(self.field_decls(fields))
        var = noun[0].lower() + noun[1:]
        out.append(f"    private final Map<String, {noun}> {var}Map = new HashMap<>();\n")
        out.append(self.extras())
        out.append("\n")

        methods = []
        for name, t in fields:
            methods.append(self.getter(name, t))
            if self.rng.random() < 0.6:
                methods.append(self.setter(name, t))
        methods.append(self.loop_method(cls, noun, verbs[0], fields))
        methods.append(self.check_method(noun, verbs[1], fields))
        methods.append(self.map_method(noun, verbs[2]))
        if self.rng.random() < 0.5:
            methods.append(self.builder_method(cls, fields))
        if with_long:
            methods.append(self.long_method(cls, fields))
        if with_to_string:
            methods.append(self.to_string(cls, fields))
        self.rng.shuffle(methods)
        out.append("\n".join(methods))
        out.append("}\n")
        return "".join(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "toy_corpus"))
    ap.add_argument("--seed", type=int, default=20211)
    ap.add_argument("--files", type=int, default=50)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    names = list(PROJECTS)
    written = 0
    used = set()
    for i in range(args.files):
        project = names[i % len(names)]
        spec = PROJECTS[project]
        gen = FileGen(rng, project, spec)
        while True:
            cls = rng.choice(spec["nouns"]) + rng.choice(["Manager", "Service", "Store", "Helper", "Tracker", "Provider", "Pool", "Util"])
            if (project, cls) not in used:
                used.add((project, cls))
                break
        text = gen.generate(cls, with_to_string=(i % 7 == 0), with_long=(i % 9 == 0))
        d = os.path.join(args.out, project)
        os.makedirs(d, exist_ok=True)
        with open(os.path.join(d, cls + ".java"), "w", encoding="utf-8") as f:
            f.write(text)
        written += 1

    # Files the ingest filter must drop.
    for project, cls in [("storage", "BlockStoreTest"), ("network", "latest_channel_utils")]:
        gen = FileGen(rng, project, PROJECTS[project])
        d = os.path.join(args.out, project)
        with open(os.path.join(d, cls + ".java"), "w", encoding="utf-8") as f:
            f.write(gen.generate(cls, False, False))
    print(f"wrote {written} files (+2 filtered) to {args.out}")


if __name__ == "__main__":
    main()
