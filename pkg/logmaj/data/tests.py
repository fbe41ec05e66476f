## Copyright (c) 2010, Coptix, Inc.  All rights reserved.
## See the LICENSE file for license terms and warranty disclaimer.

"""tests -- unit tests"""

import io, os as _os, shutil, tempfile, unittest
import yaml as _yaml
from . import os, yaml

class TestYaml(unittest.TestCase):

    def test_loads(self):
        self.assertEqual(yaml.loads('id: X\nlegs: [a, b]\n'), {'id': 'X', 'legs': ['a', 'b']})

    def test_order(self):
        self.assertEqual(list(yaml.loads('b: 1\na: 2\nc: 3\n')), ['b', 'a', 'c'])

    def test_duplicate_key(self):
        self.assertRaises(_yaml.constructor.ConstructorError,
                          lambda: yaml.loads('id: X\nid: Y\n'))

    def test_safe(self):
        self.assertRaises(_yaml.YAMLError,
                          lambda: yaml.loads('!!python/object:os.system {}'))

    def test_load_stream(self):
        self.assertEqual(yaml.load(io.StringIO('- 1\n- 2\n')), [1, 2])

    def test_dumps(self):
        self.assertEqual(yaml.dumps({'b': 1, 'a': [2]}), 'b: 1\na:\n- 2\n')

class TestFiles(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)

    def test_put(self):
        path = _os.path.join(self.folder, 'out.txt')
        os.put(path, 'hello')
        self.assertEqual(os.contents(path), 'hello')

    def test_default(self):
        self.assertEqual(os.contents(_os.path.join(self.folder, 'missing'), None), None)
        self.assertRaises(IOError, lambda: os.contents(_os.path.join(self.folder, 'missing')))

    def test_atomic_failure(self):
        path = _os.path.join(self.folder, 'out.txt')
        os.put(path, 'old')

        def fail():
            with os.atomic(path) as port:
                port.write('new')
                raise RuntimeError('boom')

        self.assertRaises(RuntimeError, fail)
        self.assertEqual(os.contents(path), 'old')
        self.assertEqual(sorted(_os.listdir(self.folder)), ['out.txt'])

    def test_listing(self):
        for name in ('b.json', 'a.json', 'notes.txt'):
            os.put(_os.path.join(self.folder, name), '{}')
        self.assertEqual(os.listing(self.folder, '.json'), ['a', 'b'])

    def test_dump(self):
        path = _os.path.join(self.folder, 'out.txt')
        os.dump(path, lambda data, port: port.write(','.join(data)), ['x', 'y'])
        self.assertEqual(os.load(path, lambda port: port.read().split(',')), ['x', 'y'])
