from unittest import TestCase
import networkx as nx

from NegCat.Core.Utils.Visualizer.SvgRenderer import render_polygon, render_ar, subcategory_colors, COLORS


class TestSvgRenderer(TestCase):

    def test_render_polygon(self):
        # ValueError
        with self.assertRaises(ValueError):
            render_polygon(2)
        with self.assertRaises(ValueError):
            render_polygon(6, [(0, 7)])
        with self.assertRaises(ValueError):
            render_polygon(6, [(2, 2)])
        # Chords
        empty = render_polygon(6)
        self.assertIn('<svg', empty)
        self.assertTrue(empty.rstrip().endswith('</svg>'))
        self.assertIn('id="outline"', empty)
        self.assertNotIn('id="chord-', empty)
        self.assertEqual(render_polygon(6, [(0, 3), (3, 0)]).count('id="chord-'), 1)
        single = render_polygon(18, [(0, 3)])
        self.assertEqual(single.count('id="chord-'), 1)
        self.assertIn('id="chord-0-3"', single)
        drawing = render_polygon(18, [(0, 3), (4, 11)], highlights=[(4, 11)])
        self.assertEqual(drawing.count('id="chord-'), 2)
        self.assertIn(COLORS['A'], drawing)
        self.assertNotIn(COLORS['A'], single)
        self.assertEqual(drawing.count('id="label-'), 18)
        self.assertNotIn('<dc:date>', drawing)
        # Determinism
        self.assertEqual(drawing, render_polygon(18, [(4, 11), (0, 3)], highlights=[(11, 4)]))

    def test_render_ar(self):
        self.assertNotIn('id="disc-', render_ar(nx.DiGraph()))
        graph = nx.DiGraph()
        graph.add_node('x', col=0, row=1)
        graph.add_node('y', col=1, row=2)
        graph.add_node('z', col=1, row=0)
        graph.add_node('t', col=5, row=1)
        graph.add_edge('x', 'y')
        graph.add_edge('x', 'z')
        # Wrap-around arrow, not drawn
        graph.add_edge('t', 'x')
        colors = subcategory_colors(members=['x'], shifted=['y'], extra=['t'])
        drawing = render_ar(graph, colors)
        self.assertEqual(drawing.count('id="disc-'), 4)
        self.assertEqual(drawing.count('id="arrow-'), 2)
        self.assertIn(COLORS['A'], drawing)
        self.assertIn(COLORS['SigmaF'], drawing)
        self.assertIn(COLORS['extra'], drawing)
        self.assertEqual(drawing, render_ar(graph, colors))
