from unittest import TestCase

from NegCat.Core.Utils.configs import make_config, check_type, check_positive
from NegCat.Core.Utils.path import create_dir, get_output_dir


class Holder:
    pass


class TestConfigs(TestCase):

    def test_make_config(self):
        holder = Holder()
        holder.config = make_config(configuration_object=holder, configuration_name='config', n=4, w=3)
        self.assertEqual(holder.config.n, 4)
        self.assertEqual(holder.config._fields, ('n', 'w'))
        # Fields not given again are carried over
        holder.config = make_config(configuration_object=holder, configuration_name='config', n=5)
        self.assertEqual((holder.config.n, holder.config.w), (5, 3))

    def test_check_type(self):
        self.assertEqual(check_type('Owner', 'n', 4, int), 4)
        self.assertEqual(check_type('Owner', 'x', None, (int, type(None))), None)
        with self.assertRaises(TypeError):
            check_type('Owner', 'n', True, int)
        with self.assertRaises(TypeError):
            check_type('Owner', 'n', 4., int)

    def test_check_positive(self):
        check_positive('Owner', [('n', 1), ('w', 3)])
        check_positive('Owner', [('bound', 0)], strict=False)
        with self.assertRaises(ValueError):
            check_positive('Owner', [('n', 1), ('w', 0)])
        with self.assertRaises(ValueError):
            check_positive('Owner', [('bound', -1)], strict=False)

    def test_path(self):
        with self.assertRaises(ValueError):
            get_output_dir('')
        from tempfile import TemporaryDirectory
        from os.path import isdir, join
        with TemporaryDirectory() as directory:
            created = create_dir(directory, 'closure')
            self.assertEqual(created, join(directory, 'closure'))
            self.assertTrue(isdir(created))
            self.assertEqual(create_dir(directory, 'closure'), created)
            with open(join(directory, 'file'), 'w') as file:
                file.write('')
            with self.assertRaises(ValueError):
                create_dir(directory, 'file')
