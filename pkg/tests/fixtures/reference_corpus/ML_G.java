public class ML_A
{
    ML_A()
    {
        System.out.print("Welcome to ML_A");
    }
}
class ML_B extends ML_A
{
    ML_B()
    {
        System.out.print("Welcome to ML_B");
    }
}
class ML_C extends ML_B
{
    ML_C()
    {
        System.out.print("Welcome to ML_C");
    }
}
class ML_D extends ML_C
{
    ML_D()
    {
        System.out.print("Welcome to ML_D");
    }
}
class ML_E extends ML_D
{
    ML_E()
    {
        System.out.print("Welcome to ML_E");
    }
}
class ML_F extends ML_E
{
    ML_F()
    {
        System.out.print("Welcome to ML_F");
    }
}
class ML_G extends ML_F
{
    ML_G()
    {
        System.out.print("Welcome to ML_G");
    }
    public static void main(String arg[])
    {
        ML_G mlf = new ML_G();
    }
}
