package Drawing.Shapes.model;

import java.awt.Color;
import java.awt.Graphics;

// Base class for every shape that can be drawn: keeps the two end points and the color.
public abstract class MyShape {

    protected int X1;
    protected int Y1;
    protected int X2;
    protected int Y2;
    protected Color shapeColor;

    public MyShape() {
        this.X1 = 0;
        this.Y1 = 0;
        this.X2 = 0;
        this.Y2 = 0;
        this.shapeColor = Color.BLACK;
    }

    public MyShape( int x1, int y1, int x2, int y2, Color color ) {
        this.X1 = x1;
        this.Y1 = y1;
        this.X2 = x2;
        this.Y2 = y2;
        this.shapeColor = color;
    }

    public int getX1() {
        return this.X1;
    }

    public void setX1( int x1 ) {
        this.X1 = x1;
    }

    public int getY1() {
        return this.Y1;
    }

    public void setY1( int y1 ) {
        this.Y1 = y1;
    }

    public int getX2() {
        return this.X2;
    }

    public void setX2( int x2 ) {
        this.X2 = x2;
    }

    public int getY2() {
        return this.Y2;
    }

    public void setY2( int y2 ) {
        this.Y2 = y2;
    }

    public Color getShapeColor() {
        return this.shapeColor;
    }

    public void setShapeColor( Color color ) {
        this.shapeColor = color;
    }

    // every concrete shape paints itself
    public abstract void draw( Graphics g );
}
