"""End-to-end checks of the bicoh command line: outputs, exit codes, JSON schemas."""

import json
import pathlib
import subprocess
import sys
import unittest

import jsonschema

BICOH = ""
SCHEMAS = pathlib.Path()


def run(*args):
    r = subprocess.run([BICOH, *args], capture_output=True, text=True, timeout=120)
    return r.returncode, r.stdout, r.stderr


def run_json(schema, *args):
    code, out, err = run(*args, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.schema.json").read_text(encoding="utf-8")))
    return code, doc


def reparses(term, system="Ltopbot"):
    code, out, _ = run("check", "--system", system, "--format", "json", term)
    return code == 0 and json.loads(out)["term"] == term


class Check(unittest.TestCase):
    def test_type(self):
        self.assertEqual(run("check", "--system", "L", "hw<p>")[:2], (0, "p |- (p /\\ p)\n"))

    def test_mismatch(self):
        code, _, err = run("check", "hk1<p,q> . hw<q>")
        self.assertEqual(code, 2)
        self.assertIn("(p /\\ q)", err)
        self.assertIn("(q /\\ q)", err)

    def test_constant_outside_system(self):
        code, _, err = run("check", "--system", "L", "hkap<p>")
        self.assertEqual(code, 2)
        self.assertIn("not in system L", err)

    def test_parse_error(self):
        self.assertEqual(run("check", "hw<p")[0], 2)

    def test_json(self):
        code, doc = run_json("check", "check", "pair(hk1<p,q>, hk2<p,q>)")
        self.assertEqual(code, 0)
        self.assertEqual(doc["fragment"], "hat")

    def test_file_input(self):
        path = pathlib.Path(self.id() + ".term")
        path.write_text("ck1<p,q>\n", encoding="utf-8")
        try:
            self.assertEqual(run("check", str(path))[1], "p |- (p \\/ q)\n")
        finally:
            path.unlink()


class Rel(unittest.TestCase):
    def test_diagonal(self):
        code, doc = run_json("relation", "rel", "hw<(p/\\q)\\/p>")
        self.assertEqual(code, 0)
        self.assertEqual(doc["pairs"], [[1, 1], [1, 4], [2, 2], [2, 5], [3, 3], [3, 6]])

    def test_empty(self):
        self.assertEqual(run_json("relation", "rel", "hkap<p>", "--system", "Ltopbot")[1]["pairs"], [])

    def test_dot(self):
        code, out, _ = run("rel", "id<p>", "--format", "dot")
        self.assertEqual(code, 0)
        self.assertEqual(out.count("[label="), 2)
        self.assertEqual(out.count("[arrowhead=none]"), 1)


class Decide(unittest.TestCase):
    def test_not_equal(self):
        code, doc = run_json("verdict", "decide", "--system", "L", "hk1<p,p>", "hk2<p,p>")
        self.assertEqual(code, 1)
        self.assertEqual(doc["witness"], [1, 1])

    def test_equal(self):
        code, doc = run_json("verdict", "decide", "(hk1<p,q> /\\ hk2<p,q>) . hw<p/\\q>", "id<p/\\q>")
        self.assertEqual(code, 0)
        self.assertEqual(doc["verdict"], "equal")

    def test_unknown_with_oracle(self):
        f = "((ck1<p,top> /\\ id<bot>) \\/ id<top>) . hk1<((p /\\ bot) \\/ top),bot>"
        g = "ck1<((p \\/ top) /\\ bot),top> . ((hk1<p,bot> \\/ id<top>) /\\ id<bot>)"
        code, doc = run_json("verdict", "decide", "--system", "Ltopbot", "--depth", "2", f, g)
        self.assertEqual(code, 3)
        self.assertEqual(doc["oracle"]["status"], "not_connected_within")

    def test_type_mismatch(self):
        self.assertEqual(run("decide", "id<p>", "id<q>")[0], 2)


class Normalize(unittest.TestCase):
    def test_normalize(self):
        code, doc = run_json("normalize", "normalize", "hk1<p,p> . hw<p>")
        self.assertEqual(code, 0)
        self.assertEqual(doc["term"], "id<p>")
        self.assertTrue(all(reparses(s[k]) for s in doc["steps"] for k in ("before", "after")))

    def test_standard_form(self):
        code, doc = run_json("standard-form", "standard-form", "hw<p> . cw<p>")
        self.assertEqual(code, 0)
        self.assertEqual((doc["f"], doc["g"]), ("hw<(p \\/ p)>", "(cw<p> /\\ cw<p>)"))


class Counterexample(unittest.TestCase):
    def test_zero(self):
        code, doc = run_json("counterexample", "counterexample", "--n", "0", "--letter", "p")
        self.assertEqual(code, 0)
        self.assertEqual(doc["f"], "((ck1<p,top> /\\ id<bot>) \\/ id<top>) . hk1<((p /\\ bot) \\/ top),bot>")
        self.assertEqual(doc["source"], "(((p /\\ bot) \\/ top) /\\ bot)")
        self.assertEqual(doc["image"], [[1, 1]])
        self.assertTrue(reparses(doc["f"]) and reparses(doc["g"]))

    def test_text(self):
        code, out, _ = run("counterexample", "--n", "2", "--letter", "q")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("f = "))


class Witness(unittest.TestCase):
    def test_twist(self):
        code, doc = run_json("witness", "witness", "--system", "L", "pair(hk2<p,p>,hk1<p,p>)", "id<p/\\p>")
        self.assertEqual(code, 0)
        self.assertEqual(doc["equation"], "(k̂k̂)")
        self.assertEqual(doc["post_context"], "hk2<p,p>")
        self.assertEqual(sorted([doc["image1"], doc["image2"]]), [[[1, 1]], [[2, 1]]])
        self.assertTrue(reparses(doc["composite1"], "L"))

    def test_dicartesian(self):
        code, doc = run_json("witness", "witness", "--system", "Ltopbot", "hk1<p,bot>", "ckap<p> . hk2<p,bot>")
        self.assertEqual(code, 0)
        self.assertEqual(doc["equation"], "(k̂ǩ)")
        self.assertEqual(doc["h_a"], "(hk1<p,bot> /\\ id<bot>)")
        self.assertEqual((doc["image1"], doc["image2"]), ([[1, 1]], []))

    def test_no_witness(self):
        self.assertEqual(run("witness", "id<p>", "id<p> . id<p>")[0], 2)


class Model(unittest.TestCase):
    def test_separation(self):
        code, doc = run_json("model", "model", "--system", "Ltopbot", "--variant", "star-empty",
                             "hk1<p,bot>", "ckap<p> . hk2<p,bot>")
        self.assertEqual(code, 0)
        self.assertTrue(doc["equal"])
        self.assertEqual(run("model", "--system", "Ltopbot", "hk1<p,bot>", "ckap<p> . hk2<p,bot>")[0], 1)

    def test_table(self):
        code, doc = run_json("model", "model", "hw<p>")
        self.assertEqual(code, 0)
        self.assertEqual(doc["functions"][0]["table"], {"*": "*", "a": "(a,a)"})

    def test_size(self):
        code, doc = run_json("model", "model", "--size", "3", "hk1<p,p>", "hk2<p,p>")
        self.assertEqual(code, 1)
        self.assertFalse(doc["equal"])


if __name__ == "__main__":
    BICOH = sys.argv.pop(1)
    SCHEMAS = pathlib.Path(sys.argv.pop(1))
    unittest.main()
