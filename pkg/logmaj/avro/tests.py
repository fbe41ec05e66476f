## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import io, math, unittest
import numpy as np
from . import *

# Schema can be declared externally in a JSON format.  A record has a
# name and a list of fields; fields may declare defaults.  Records in
# one load() may refer to records from an earlier one.

SCHEMA = """
{
    "type": "record",
    "name": "test.Point",
    "fields": [
        { "name": "x", "type": "double" },
        { "name": "y", "type": "double", "default": 0.0 }
    ]
}

{
    "type": "record",
    "name": "test.Path",
    "doc": "A labelled polyline.",
    "fields": [
        { "name": "label", "type": ["null", "string"], "default": null },
        { "name": "points", "type": { "type": "array", "items": "test.Point" } },
        { "name": "weights", "type": { "type": "map", "values": "double" }, "default": {} }
    ]
}
"""

LATER = """
{
    "type": "record",
    "name": "test.Route",
    "fields": [
        { "name": "path", "type": "test.Path" },
        { "name": "closed", "type": "boolean", "default": false }
    ]
}
"""

schema.load(SCHEMA)

class Point(structure('test.Point')):

    def norm(self):
        return math.hypot(self.x, self.y)

class Path(structure('test.Path')):
    pass

class TestExternalSchema(unittest.TestCase):

    def test_load(self):
        loaded = schema.load(SCHEMA)
        self.assertEqual([s.fullname for s in loaded], ['test.Point', 'test.Path'])

    def test_load_file(self):
        loaded = schema.load(io.StringIO(SCHEMA))
        self.assertEqual(len(loaded), 2)

    def test_cross_reference(self):
        (route, ) = schema.load(LATER)
        self.assertEqual(route.fullname, 'test.Route')
        self.assertEqual(types.get_schema('test.Point').fullname, 'test.Point')

    def test_redeclare(self):
        changed = SCHEMA.replace('"default": 0.0', '"default": 1.0')
        self.assertRaises(TypeError, lambda: schema.load(changed))

    def test_unnamed(self):
        self.assertRaises(SyntaxError, lambda: schema.load('{ "type": "array", "items": "int" }'))

    def test_bad_json(self):
        self.assertRaises(SyntaxError, lambda: schema.load('{ "type": '))

    def test_iload(self):
        self.assertEqual(list(schema.iload('[1, 2] "a" { "c": 3 }')), [[1, 2], 'a', {'c': 3}])

## A structure is a simple Python type for an Avro record.  Make sure
## they are well-behaved Python types and marshall correctly.

class TestStructure(unittest.TestCase):

    def test_declared(self):
        self.assertIs(types.get_type('test.Point'), Point)
        self.assertEqual(Point.__all__, ('x', 'y'))
        self.assertEqual(Path.__doc__, 'A labelled polyline.')

    def test_defaults(self):
        self.assertEqual(Point(1.0).y, 0.0)
        path = Path(points=[])
        self.assertIsNone(path.label)
        self.assertEqual(path.weights, {})
        self.assertIsNot(path.weights, Path(points=[]).weights)

    def test_bad_arguments(self):
        self.assertRaises(TypeError, lambda: Point())
        self.assertRaises(TypeError, lambda: Point(1.0, 2.0, 3.0))
        self.assertRaises(TypeError, lambda: Point(1.0, x=2.0))
        self.assertRaises(TypeError, lambda: Point(1.0, z=2.0))

    def test_slots(self):
        point = Point(3.0, 4.0)
        self.assertEqual(point.norm(), 5.0)
        self.assertRaises(AttributeError, lambda: setattr(point, 'z', 1))

    def test_eq(self):
        self.assertEqual(Point(1.0, 2.0), Point(1.0, 2.0))
        self.assertNotEqual(Point(1.0, 2.0), Point(2.0, 1.0))

    def test_replace(self):
        point = Point(1.0, 2.0)
        moved = point.replace(y=5.0)
        self.assertEqual((point.y, moved.y), (2.0, 5.0))

    def test_repr(self):
        self.assertEqual(repr(Point(1.0, 2.0)), 'Point(x=1.0, y=2.0)')

class TestMarshall(unittest.TestCase):

    def test_dumps(self):
        path = Path('edge', [Point(1.0, 2.0)], {'b': 1.0, 'a': 2.0})
        self.assertEqual(
            marshall.dumps(path),
            '{"label": "edge", "points": [{"x": 1.0, "y": 2.0}], "weights": {"a": 2.0, "b": 1.0}}'
        )

    def test_loads(self):
        path = marshall.loads('{"points": [{"x": 1, "y": 2}]}', Path)
        self.assertIsInstance(path.points[0], Point)
        self.assertEqual(path.points[0].x, 1.0)
        self.assertIsInstance(path.points[0].x, float)
        self.assertIsNone(path.label)

    def test_loads_missing(self):
        self.assertRaises(ValueError, lambda: marshall.loads('{"label": "x"}', Path))

    def test_numpy(self):
        self.assertEqual(marshall.dumps({'v': np.arange(3.0), 's': np.float64(0.5)}),
                         '{"s": 0.5, "v": [0.0, 1.0, 2.0]}')

    def test_non_finite(self):
        point = marshall.loads(marshall.dumps(Point(float('-inf'), 0.0)), Point)
        self.assertEqual(point.x, float('-inf'))

    def test_validate(self):
        path = Path(None, [Point(1.0, np.float64(2.0))])
        self.assertIs(marshall.validate(path), path)
        self.assertRaises(ValueError, lambda: marshall.validate(Path(None, [Point('a', 1.0)])))
        self.assertRaises(ValueError, lambda: marshall.validate(Path(3, [])))
