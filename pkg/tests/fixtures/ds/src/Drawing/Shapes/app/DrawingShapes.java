package Drawing.Shapes.app;

import java.awt.BorderLayout;
import javax.swing.JComboBox;
import javax.swing.JFrame;
import javax.swing.JLabel;
import Drawing.Shapes.gui.PaintJPanel;

// Main window: combo boxes pick the kind and the color, the panel shows the picture.
public class DrawingShapes extends JFrame {

    private PaintJPanel paintPanel;
    private JComboBox shapeChooser;
    private JComboBox colorChooser;
    private JLabel statusLabel;
    private String[] shapeNames;
    private String[] colorNames;

    public DrawingShapes() {
        super( "Drawing Shapes" );
        this.shapeNames = new String[ 3 ];
        this.colorNames = new String[ 3 ];
        this.paintPanel = new PaintJPanel();
        this.shapeChooser = new JComboBox();
        this.colorChooser = new JComboBox();
        this.statusLabel = new JLabel( "ready" );
        add( this.shapeChooser, BorderLayout.NORTH );
        add( this.paintPanel, BorderLayout.CENTER );
        add( this.statusLabel, BorderLayout.SOUTH );
        setSize( 400, 400 );
        setVisible( true );
    }

    public static void main( String[] args ) {
        DrawingShapes application = new DrawingShapes();
        application.setDefaultCloseOperation( JFrame.EXIT_ON_CLOSE );
    }
}
