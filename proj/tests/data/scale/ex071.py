k = 0
x = eval(input())
k = k + x
x = eval(input())
k = k + x
x = eval(input())
k = k + x
print(k)
